#ifndef LIECOMB_ORACLE_HPP
#define LIECOMB_ORACLE_HPP

// Brute-force tensor decomposition for SU(N), N in {2,3,4}, by character
// arithmetic: Freudenthal's recursion builds the full weight system of each
// factor, the systems are convolved, and irreps are peeled off the product
// from the top in an order refining dominance.  Nothing here shares a
// formula or code path with the SU(3) closed forms or with the honeycomb
// counting, which is the point: this module is the ground truth the rest of
// the library is tested against, and the engine for the SU(4) checks.

#include <array>
#include <cstdint>
#include <memory>
#include <vector>

#include "liecomb/multiplicity.hpp"
#include "liecomb/weights.hpp"

namespace liecomb::oracle {

// Full weight system of an irrep: every weight (in Dynkin coordinates,
// possibly negative) with its multiplicity.  Weyl-invariant by construction.
struct WeightSystem {
  int rank = 3;                                          // the N of SU(N)
  std::vector<std::pair<std::array<int, 3>, int>> entries;  // (weight, mult)

  long long total() const;  // == Weyl dimension of the highest weight
};

// Freudenthal weight system of lambda.  Memoized; the returned object is
// immutable and safe to share between threads.
std::shared_ptr<const WeightSystem> weight_system(const Weight& lambda);

// Exact decomposition of lambda (x) mu via convolve-and-peel.
DecompositionTable decompose_oracle(const Weight& lambda, const Weight& mu);

// Weyl dimension formula, any rank 2..4.
long long weyl_dim(const Weight& lambda);

// Fixed checks against the published SU(4) example (1,2,2) (x) (2,2,1):
// the sixteen multiplicity-1 polytope vertices, the two multiplicity-2 and
// the single multiplicity-5 weight on the face nu2 = 0, convex-hull
// membership of every weight of the table, and the equal-total identity
// for the conjugated pairing.
struct Su4PolytopeReport {
  bool vertices_mult1_ok = false;
  bool mult2_ok = false;
  bool mult5_ok = false;
  bool face_ok = false;       // the higher-multiplicity points sit on nu2 = 0
  bool hull_ok = false;       // every table weight inside hull(vertices)
  bool theorem1_ok = false;   // equal totals under conjugation of mu
  long long total = 0;
  std::vector<std::string> failures;

  bool passed() const {
    return vertices_mult1_ok && mult2_ok && mult5_ok && face_ok && hull_ok && theorem1_ok;
  }
};

Su4PolytopeReport su4_polytope_check();

}  // namespace liecomb::oracle

#endif
