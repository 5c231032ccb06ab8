#ifndef LIECOMB_MULTIPLICITY_HPP
#define LIECOMB_MULTIPLICITY_HPP

// Closed-form SU(3) tensor-product multiplicities and census formulas:
//
//  * mult()           the 18-argument max(0, 1+min{...}) formula, evaluated
//                     in exact integers with all denominators cleared;
//  * mult_reduced()   the S1/S2 shift that reduces every triple to the
//                     "balanced" case 1 + min(l1,l2,m1,m2,n1,n2,L,M,N);
//  * mult_max()       min of the four input labels, plus one;
//  * distinct_count() Mandel'tsveig's count M of distinct highest weights;
//  * census()         the number sigma(s) of distinct irreps of each
//                     multiplicity s (two-branch formula; the closed form
//                     is valid only for s < mult_max);
//  * decompose()      the full decomposition table;
//  * verify_theorem1/2()  the two conjugation identities: equal totals /
//                     equal multiplicity multisets for lambda(x)mu vs
//                     lambda(x)conj(mu).

#include <cstdint>
#include <map>
#include <vector>

#include "liecomb/weights.hpp"

namespace liecomb {

// Multiset of (nu, multiplicity) for a product lambda (x) mu, sorted
// lexicographically by (nu1, nu2).
struct DecompositionTable {
  struct Entry {
    Weight nu;
    int mult = 0;
    bool operator==(const Entry&) const = default;
  };

  Weight lambda, mu;
  std::vector<Entry> entries;

  int distinct() const { return static_cast<int>(entries.size()); }
  long long total_multiplicity() const;
  long long sum_of_squares() const;
  // All multiplicities, ascending; the object Theorem 2 compares.
  std::vector<int> multiset() const;
  // Histogram s -> #{nu : mult == s}.
  std::map<int, long long> histogram() const;
  // Multiplicity of a given nu (0 if absent).
  int mult_of(const Weight& nu) const;

  bool operator==(const DecompositionTable&) const = default;
};

// sigma(lambda,mu;s) for s = 1..mult_max, alongside the derived totals.
struct MultiplicityCensus {
  std::map<int, long long> by_mult;  // s -> sigma(s)
  long long distinct = 0;            // M = sum sigma(s)
  int mult_max = 0;
  long long total = 0;               // sum s*sigma(s)

  bool operator==(const MultiplicityCensus&) const = default;
};

struct Theorem1Report {
  long long total = 0, total_conj = 0;
  long long squares = 0, squares_conj = 0;
  bool equal = false;  // both identities
};

struct Theorem2Report {
  std::vector<int> multiset, multiset_conj;
  bool equal = false;
};

// N_{lambda mu}^nu.  Returns 0 on triality violation; never throws.
int mult(const Weight& lambda, const Weight& mu, const Weight& nu);

// Same value through the S1/S2 reduction (case 1 after shifting by
// s = |S1-S2|/3).  Returns 0 when S1-S2 is not divisible by 3.
int mult_reduced(const Weight& lambda, const Weight& mu, const Weight& nu);

int mult_max(const Weight& lambda, const Weight& mu);

// Number M of distinct highest weights in lambda (x) mu.  The inputs are
// ordered internally so that max(l1,l2) >= max(m1,m2), which the counting
// formula assumes; tensor multiplicity is symmetric so this is safe.
long long distinct_count(const Weight& lambda, const Weight& mu);

MultiplicityCensus census(const Weight& lambda, const Weight& mu);

DecompositionTable decompose(const Weight& lambda, const Weight& mu);

Theorem1Report verify_theorem1(const Weight& lambda, const Weight& mu);
Theorem2Report verify_theorem2(const Weight& lambda, const Weight& mu);

// Weyl dimension (a+1)(b+1)(a+b+2)/2; test plumbing for the sum rule
// sum mult*dim(nu) = dim(lambda)*dim(mu).
long long dim_su3(const Weight& w);

namespace detail {
// Raw-label core of the 18-argument formula.
int mult3(int l1, int l2, int m1, int m2, int n1, int n2);
}  // namespace detail

}  // namespace liecomb

#endif
