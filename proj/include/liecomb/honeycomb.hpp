#ifndef LIECOMB_HONEYCOMB_HPP
#define LIECOMB_HONEYCOMB_HPP

// SU(3) Knutson-Tao honeycombs.  For fixed external weights (lambda, mu,
// nu) the honeycomb has a single free hexagon parameter alpha; the nine
// inner edges are affine-integer expressions of (lambda, mu, nu, alpha),
// constrained by nine edge-orientation inequalities (grouped 3x3 by the
// short-diagonal direction of the dual hive rhombi: -, \, /).  The number
// of integer alpha passing all nine equals the tensor multiplicity.
//
// The dual hive is the 3x3x3 triangular array with the lower-left corner
// pinned to 0; its single interior vertex carries alpha and its rhombus
// inequalities are equivalent to the nine orientation constraints.

#include <array>
#include <string>
#include <vector>

#include "liecomb/multiplicity.hpp"
#include "liecomb/weights.hpp"

namespace liecomb::honeycomb {

// Closed integer interval of admissible hexagon parameters; empty (lo > hi)
// exactly when the multiplicity vanishes.  width + 1 == mult otherwise.
struct AlphaInterval {
  int lo = 0, hi = -1;

  bool empty() const { return lo > hi; }
  int count() const { return empty() ? 0 : hi - lo + 1; }
  bool contains(int a) const { return !empty() && lo <= a && a <= hi; }
};

// Inner edges in the fixed reading order "top to bottom, left to right":
//   0 top stem          -m1-m2
//   1 upper-left        -l1-2l2+a
//   2 upper-right        l1+2l2+m1+m2-a
//   3 left stem          l1+l2-a
//   4 right stem        -l1-2l2-m1-2m2+a
//   5 lower-left        Sigma-l1-l2
//   6 bottom-left        a-Sigma
//   7 bottom-right       n2+n3+Sigma-a
//   8 lower-right        n3
constexpr int kInnerEdges = 9;
extern const std::array<const char*, kInnerEdges> kInnerEdgeNames;

// Coefficients of 3*edge over the basis (l1, l2, m1, m2, n1, n2, alpha, 1):
// an exact symbolic table of the inner-edge expressions, exported so tests
// can check the construction without re-deriving it.
extern const std::array<std::array<int, 8>, kInnerEdges> kInnerEdgeCoeffs3;

struct Honeycomb {
  Weight lambda, mu, nu;
  int alpha = 0;
  int nu3 = 0;                          // U(1)-charge completion of nu
  int sigma = 0;                        // nu1 + nu2 + nu3
  std::array<int, kInnerEdges> inner{};  // reading order above
  std::array<int, 9> boundary{};         // clockwise from lambda1+lambda2
};

// [alpha_min, alpha_max]; empty on triality violation or vanishing
// multiplicity.  alpha_max is the three-term minimum; alpha_min the
// six-term maximum of the lower bounds.
AlphaInterval alpha_bounds(const Weight& lambda, const Weight& mu, const Weight& nu);

// The nine orientation inequalities at the given alpha, grouped by rows of
// three; entry r*3+p is row r, position p.
std::array<bool, 9> check_inequalities(const Weight& lambda, const Weight& mu, const Weight& nu,
                                       int alpha);

// Builds the honeycomb; throws InequalityViolation (listing the failed
// (row, position) pairs) when alpha is outside the admissible interval,
// NotInProduct on triality violation.
Honeycomb build(const Weight& lambda, const Weight& mu, const Weight& nu, int alpha);

// Number of integer alpha passing all nine inequalities; equals
// mult(lambda, mu, nu).
int count_by_alpha(const Weight& lambda, const Weight& mu, const Weight& nu);

// m(nu, alpha) = alpha - alpha_min + 1, in {1, ..., mult}.
int mult_index(const Weight& lambda, const Weight& mu, const Weight& nu, int alpha);

// The 3x3x3 hive: ten vertices, rows bottom-up, row r holding 4-r values.
// value(0,0) = 0 by convention; the interior vertex value(1,1) carries
// alpha.
struct Hive {
  std::array<std::array<int, 4>, 4> v{};  // v[row][idx], idx < 4-row

  int value(int row, int idx) const { return v[static_cast<size_t>(row)][static_cast<size_t>(idx)]; }
  // Boundary values clockwise from the lower-left corner (10 entries, the
  // last one returning to the corner and hence 0).
  std::array<int, 10> boundary_clockwise() const;
  // The nine rhombus inequalities (sum over the short diagonal >= sum over
  // the long one), in the same 3x3 grouping as check_inequalities.
  std::array<bool, 9> rhombus_checks() const;
};

Hive to_hive(const Honeycomb& h);

// The Wesslen inequality system on (nu1, nu2) for fixed (lambda, mu):
// the two positivity constraints plus the twelve affine bounds obtained by
// expanding the max/min forms.  mult > 0 implies all hold; conversely a
// lattice point of the correct triality satisfying all of them occurs in
// the product.
struct WesslenSystem {
  struct Form {
    int c1 = 0, c2 = 0, c0 = 0;  // c1*nu1 + c2*nu2 + c0 >= 0
    std::string name;
    long long eval(int n1, int n2) const {
      return static_cast<long long>(c1) * n1 + static_cast<long long>(c2) * n2 + c0;
    }
  };
  std::vector<Form> forms;

  bool all_hold(const Weight& nu) const;
  std::vector<std::string> violated(const Weight& nu) const;
};

WesslenSystem wesslen_bounds(const Weight& lambda, const Weight& mu);

}  // namespace liecomb::honeycomb

#endif
