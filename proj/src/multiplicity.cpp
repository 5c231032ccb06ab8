#include "liecomb/multiplicity.hpp"

#include <algorithm>
#include <array>

namespace liecomb {

static void require_su3(const Weight& w, const char* op) {
  if (w.rank() != 3)
    throw RankError(std::string(op) + " requires SU(3) weights, got rank " + std::to_string(w.rank()));
}

namespace detail {

// The 18 arguments of the min in the multiplicity formula, all scaled by 3.
// Six are the labels themselves; the remaining twelve are the affine forms
// coming from the consistency relations of the alpha inequality system.
// When triality is conserved every entry is divisible by 3.
int mult3(int l1, int l2, int m1, int m2, int n1, int n2) {
  if (((l1 + 2 * l2 + m1 + 2 * m2 - n1 - 2 * n2) % 3 + 3) % 3 != 0) return 0;
  const std::array<int, 18> args = {
      3 * l1,
      3 * l2,
      3 * m1,
      3 * m2,
      3 * n1,
      3 * n2,
      2 * l1 + l2 + 2 * m1 + m2 - 2 * n1 - n2,
      l1 - l2 + m1 + 2 * m2 - n1 + n2,
      l1 + 2 * l2 + m1 + 2 * m2 - n1 - 2 * n2,
      2 * l1 + l2 - m1 + m2 + n1 - n2,
      l1 + 2 * l2 + m1 - m2 - n1 + n2,
      2 * l1 + l2 - m1 - 2 * m2 + n1 + 2 * n2,
      l1 + 2 * l2 - 2 * m1 - m2 + 2 * n1 + n2,
      -l1 + l2 - m1 + m2 + n1 + 2 * n2,
      l1 - l2 + m1 - m2 + 2 * n1 + n2,
      -l1 - 2 * l2 + 2 * m1 + m2 + n1 + 2 * n2,
      -l1 + l2 + 2 * m1 + m2 + n1 - n2,
      -2 * l1 - l2 + m1 + 2 * m2 + 2 * n1 + n2,
  };
  const int lo = *std::min_element(args.begin(), args.end());
  return std::max(0, 1 + lo / 3);
}

}  // namespace detail

int mult(const Weight& lambda, const Weight& mu, const Weight& nu) {
  require_su3(lambda, "mult");
  require_su3(mu, "mult");
  require_su3(nu, "mult");
  return detail::mult3(lambda[0], lambda[1], mu[0], mu[1], nu[0], nu[1]);
}

int mult_reduced(const Weight& lambda, const Weight& mu, const Weight& nu) {
  require_su3(lambda, "mult_reduced");
  require_su3(mu, "mult_reduced");
  require_su3(nu, "mult_reduced");
  int l1 = lambda[0], l2 = lambda[1];
  int m1 = mu[0], m2 = mu[1];
  int n1 = nu[0], n2 = nu[1];

  const int s1 = l1 + m1 + n2;
  const int s2 = l2 + m2 + n1;
  if ((s1 - s2) % 3 != 0) return 0;
  if (s1 > s2) {
    const int s = (s1 - s2) / 3;
    l1 -= s;
    m1 -= s;
    n2 -= s;
  } else if (s2 > s1) {
    const int s = (s2 - s1) / 3;
    l2 -= s;
    m2 -= s;
    n1 -= s;
  }
  const int S = l1 + m1 + n2;  // == l2 + m2 + n1 now
  const int L = S - (l1 + l2);
  const int M = S - (m1 + m2);
  const int N = S - (n1 + n2);
  const int lo = std::min({l1, l2, m1, m2, n1, n2, L, M, N});
  return std::max(0, 1 + lo);
}

int mult_max(const Weight& lambda, const Weight& mu) {
  require_su3(lambda, "mult_max");
  require_su3(mu, "mult_max");
  return std::min({lambda[0], lambda[1], mu[0], mu[1]}) + 1;
}

// The counting formulas below assume max(l1,l2) >= max(m1,m2).
static void order_for_census(int& l1, int& l2, int& m1, int& m2) {
  if (std::max(l1, l2) < std::max(m1, m2)) {
    std::swap(l1, m1);
    std::swap(l2, m2);
  }
}

long long distinct_count(const Weight& lambda, const Weight& mu) {
  require_su3(lambda, "distinct_count");
  require_su3(mu, "distinct_count");
  int l1 = lambda[0], l2 = lambda[1], m1 = mu[0], m2 = mu[1];
  order_for_census(l1, l2, m1, m2);
  long long total = 0;
  for (int ell = -std::min(l2, m2); ell <= std::min(l1, m1); ++ell) {
    int n;
    if (ell >= 0)
      n = std::min(l1 - ell, m2) + std::min(m1 - ell, l2);
    else
      n = std::min(l1, m2 + ell) + std::min(m1, l2 + ell);
    total += n + 1;
  }
  return total;
}

MultiplicityCensus census(const Weight& lambda, const Weight& mu) {
  int l1 = lambda[0], l2 = lambda[1], m1 = mu[0], m2 = mu[1];
  const int mmax = mult_max(lambda, mu);
  order_for_census(l1, l2, m1, m2);

  MultiplicityCensus c;
  c.mult_max = mmax;
  c.distinct = distinct_count(lambda, mu);
  long long partial = 0;
  for (int s = 1; s < mmax; ++s) {
    // delta n := n - (s-1); all four deltas are > 0 in this range.
    const int dl1 = l1 - (s - 1), dl2 = l2 - (s - 1);
    const int dm1 = m1 - (s - 1), dm2 = m2 - (s - 1);
    const long long sigma = std::min(dl1, dm1 + dm2) + std::min(dl2, dm1 + dm2) + dm1 + dm2;
    c.by_mult[s] = sigma;
    partial += sigma;
  }
  c.by_mult[mmax] = c.distinct - partial;  // the closed form is wrong here
  for (const auto& [s, sigma] : c.by_mult) c.total += s * sigma;
  return c;
}

DecompositionTable decompose(const Weight& lambda, const Weight& mu) {
  require_su3(lambda, "decompose");
  require_su3(mu, "decompose");
  const int l1 = lambda[0], l2 = lambda[1], m1 = mu[0], m2 = mu[1];
  const int level = l1 + l2 + m1 + m2;  // level of nu is bounded by level(H)
  const int tau = (l1 + 2 * l2 + m1 + 2 * m2) % 3;

  DecompositionTable t;
  t.lambda = lambda;
  t.mu = mu;
  for (int n1 = 0; n1 <= level; ++n1) {
    // n1 + 2 n2 = tau (mod 3), so n2 starts at (n1 - tau) mod 3 and steps by 3
    int n2 = ((n1 - tau) % 3 + 3) % 3;
    for (; n1 + n2 <= level; n2 += 3) {
      const int m = detail::mult3(l1, l2, m1, m2, n1, n2);
      if (m > 0) t.entries.push_back({Weight::su3(n1, n2), m});
    }
  }
  return t;  // construction order is already lexicographic in (n1, n2)
}

long long DecompositionTable::total_multiplicity() const {
  long long s = 0;
  for (const auto& e : entries) s += e.mult;
  return s;
}

long long DecompositionTable::sum_of_squares() const {
  long long s = 0;
  for (const auto& e : entries) s += static_cast<long long>(e.mult) * e.mult;
  return s;
}

std::vector<int> DecompositionTable::multiset() const {
  std::vector<int> m;
  m.reserve(entries.size());
  for (const auto& e : entries) m.push_back(e.mult);
  std::sort(m.begin(), m.end());
  return m;
}

std::map<int, long long> DecompositionTable::histogram() const {
  std::map<int, long long> h;
  for (const auto& e : entries) ++h[e.mult];
  return h;
}

int DecompositionTable::mult_of(const Weight& nu) const {
  auto it = std::lower_bound(entries.begin(), entries.end(), nu,
                             [](const Entry& e, const Weight& w) { return e.nu < w; });
  return (it != entries.end() && it->nu == nu) ? it->mult : 0;
}

Theorem1Report verify_theorem1(const Weight& lambda, const Weight& mu) {
  const DecompositionTable a = decompose(lambda, mu);
  const DecompositionTable b = decompose(lambda, mu.conjugate());
  Theorem1Report r;
  r.total = a.total_multiplicity();
  r.total_conj = b.total_multiplicity();
  r.squares = a.sum_of_squares();
  r.squares_conj = b.sum_of_squares();
  r.equal = (r.total == r.total_conj) && (r.squares == r.squares_conj);
  return r;
}

Theorem2Report verify_theorem2(const Weight& lambda, const Weight& mu) {
  Theorem2Report r;
  r.multiset = decompose(lambda, mu).multiset();
  r.multiset_conj = decompose(lambda, mu.conjugate()).multiset();
  r.equal = (r.multiset == r.multiset_conj);
  return r;
}

long long dim_su3(const Weight& w) {
  const long long a = w[0], b = w[1];
  return (a + 1) * (b + 1) * (a + b + 2) / 2;
}

}  // namespace liecomb
