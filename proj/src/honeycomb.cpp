#include "liecomb/honeycomb.hpp"

#include <algorithm>
#include <sstream>

namespace liecomb::honeycomb {

const std::array<const char*, kInnerEdges> kInnerEdgeNames = {
    "top",        "upper_left", "upper_right", "left_stem", "right_stem",
    "lower_left", "bottom_left", "bottom_right", "lower_right"};

// 3*edge over (l1, l2, m1, m2, n1, n2, alpha, 1); uses
// 3*nu3 = l1+2l2+m1+2m2-n1-2n2 and 3*Sigma = l1+2l2+m1+2m2+2n1+n2.
const std::array<std::array<int, 8>, kInnerEdges> kInnerEdgeCoeffs3 = {{
    {0, 0, -3, -3, 0, 0, 0, 0},    // -m1-m2
    {-3, -6, 0, 0, 0, 0, 3, 0},    // -l1-2l2+a
    {3, 6, 3, 3, 0, 0, -3, 0},     // l1+2l2+m1+m2-a
    {3, 3, 0, 0, 0, 0, -3, 0},     // l1+l2-a
    {-3, -6, -3, -6, 0, 0, 3, 0},  // -l1-2l2-m1-2m2+a
    {-2, -1, 1, 2, 2, 1, 0, 0},    // Sigma-l1-l2
    {-1, -2, -1, -2, -2, -1, 3, 0},  // a-Sigma
    {2, 4, 2, 4, 1, 2, -3, 0},     // n2+n3+Sigma-a
    {1, 2, 1, 2, -1, -2, 0, 0},    // n3
}};

namespace {

struct Extern3 {
  int l1, l2, m1, m2, n1, n2;
  int n3, sigma;
  bool triality_ok;
};

Extern3 externs(const Weight& lambda, const Weight& mu, const Weight& nu) {
  if (lambda.rank() != 3 || mu.rank() != 3 || nu.rank() != 3)
    throw RankError("honeycombs are defined for SU(3) weights only");
  Extern3 e{lambda[0], lambda[1], mu[0], mu[1], nu[0], nu[1], 0, 0, false};
  const int t = e.l1 + 2 * e.l2 + e.m1 + 2 * e.m2 - e.n1 - 2 * e.n2;
  e.triality_ok = (t % 3 + 3) % 3 == 0;
  if (e.triality_ok) {
    e.n3 = t / 3;
    e.sigma = e.n1 + e.n2 + e.n3;
  }
  return e;
}

// Lower bounds (alpha >= ...) indexed by their Eq-position in the 3x3 grid,
// and the three upper bounds likewise.
struct Bounds {
  std::array<int, 6> lo;
  std::array<int, 3> hi;
};

Bounds alpha_bound_terms(const Extern3& e) {
  Bounds b{};
  b.lo = {
      e.sigma + e.l2,                    // (0,0)
      e.sigma + e.n2 + e.n3 - e.m2,      // (0,2)
      e.sigma + e.n3,                    // (1,0)
      e.l1 + e.l2 + e.m1 + e.m2,         // (1,2)
      e.l1 + 2 * e.l2 + e.m2,            // (2,1)
      e.l1 + e.l2 + e.n2 + e.n3,         // (2,2)
  };
  b.hi = {
      e.l1 + 2 * e.l2 + e.m1 + e.m2,             // (0,1)
      e.sigma + e.l1 + e.l2,                     // (1,1)
      e.l1 + 2 * e.l2 + e.m1 + 2 * e.m2 - e.n3,  // (2,0)
  };
  return b;
}

}  // namespace

AlphaInterval alpha_bounds(const Weight& lambda, const Weight& mu, const Weight& nu) {
  const Extern3 e = externs(lambda, mu, nu);
  if (!e.triality_ok) return {};
  const Bounds b = alpha_bound_terms(e);
  AlphaInterval iv;
  iv.lo = *std::max_element(b.lo.begin(), b.lo.end());
  iv.hi = *std::min_element(b.hi.begin(), b.hi.end());
  if (iv.empty()) return {};
  return iv;
}

std::array<bool, 9> check_inequalities(const Weight& lambda, const Weight& mu, const Weight& nu,
                                       int alpha) {
  const Extern3 e = externs(lambda, mu, nu);
  std::array<bool, 9> ok{};
  if (!e.triality_ok) return ok;  // no integer nu3: nothing is satisfiable
  // rows by short-diagonal direction: -, \, /
  ok[0] = e.sigma - e.l1 - e.l2 <= alpha - e.l1 - 2 * e.l2;
  ok[1] = alpha - e.l1 - 2 * e.l2 <= e.m1 + e.m2;
  ok[2] = e.sigma + e.n2 + e.n3 - alpha <= e.m2;
  ok[3] = e.sigma + e.n3 <= alpha;
  ok[4] = alpha <= e.sigma + e.l1 + e.l2;
  ok[5] = e.l1 + 2 * e.l2 + e.m1 + e.m2 - alpha <= e.l2;
  ok[6] = e.n3 <= e.l1 + 2 * e.l2 + e.m1 + 2 * e.m2 - alpha;
  ok[7] = e.l1 + 2 * e.l2 + e.m1 + 2 * e.m2 - alpha <= e.m1 + e.m2;
  ok[8] = e.n2 + e.n3 <= alpha - e.l1 - e.l2;
  return ok;
}

Honeycomb build(const Weight& lambda, const Weight& mu, const Weight& nu, int alpha) {
  const Extern3 e = externs(lambda, mu, nu);
  if (!e.triality_ok)
    throw NotInProduct("triality violated for " + lambda.str() + " (x) " + mu.str() + " -> " +
                       nu.str());
  const auto ok = check_inequalities(lambda, mu, nu, alpha);
  if (!std::all_of(ok.begin(), ok.end(), [](bool b) { return b; })) {
    std::vector<std::pair<int, int>> bad;
    std::ostringstream os;
    os << "alpha = " << alpha << " violates orientation constraints";
    for (int i = 0; i < 9; ++i)
      if (!ok[static_cast<size_t>(i)]) {
        bad.emplace_back(i / 3, i % 3);
        os << " (" << i / 3 << "," << i % 3 << ")";
      }
    throw InequalityViolation(os.str(), std::move(bad));
  }

  Honeycomb h;
  h.lambda = lambda;
  h.mu = mu;
  h.nu = nu;
  h.alpha = alpha;
  h.nu3 = e.n3;
  h.sigma = e.sigma;
  h.inner = {
      -e.m1 - e.m2,
      -e.l1 - 2 * e.l2 + alpha,
      e.l1 + 2 * e.l2 + e.m1 + e.m2 - alpha,
      e.l1 + e.l2 - alpha,
      -e.l1 - 2 * e.l2 - e.m1 - 2 * e.m2 + alpha,
      e.sigma - e.l1 - e.l2,
      alpha - e.sigma,
      e.n2 + e.n3 + e.sigma - alpha,
      e.n3,
  };
  h.boundary = {
      e.l1 + e.l2, e.l2, 0, e.m1 + e.m2, e.m2, 0, -e.n3, -e.n2 - e.n3, -e.n1 - e.n2 - e.n3,
  };
  return h;
}

int count_by_alpha(const Weight& lambda, const Weight& mu, const Weight& nu) {
  const Extern3 e = externs(lambda, mu, nu);
  if (!e.triality_ok) return 0;
  const Bounds b = alpha_bound_terms(e);
  const int from = std::min(*std::min_element(b.lo.begin(), b.lo.end()),
                            *std::min_element(b.hi.begin(), b.hi.end())) - 1;
  const int to = std::max(*std::max_element(b.lo.begin(), b.lo.end()),
                          *std::max_element(b.hi.begin(), b.hi.end())) + 1;
  int count = 0;
  for (int a = from; a <= to; ++a) {
    const auto ok = check_inequalities(lambda, mu, nu, a);
    count += std::all_of(ok.begin(), ok.end(), [](bool v) { return v; }) ? 1 : 0;
  }
  return count;
}

int mult_index(const Weight& lambda, const Weight& mu, const Weight& nu, int alpha) {
  const AlphaInterval iv = alpha_bounds(lambda, mu, nu);
  if (!iv.contains(alpha))
    throw OutOfRange("alpha = " + std::to_string(alpha) + " outside [" + std::to_string(iv.lo) +
                     ", " + std::to_string(iv.hi) + "]");
  return alpha - iv.lo + 1;
}

std::array<int, 10> Hive::boundary_clockwise() const {
  return {value(0, 0), value(1, 0), value(2, 0), value(3, 0), value(2, 1),
          value(1, 2), value(0, 3), value(0, 2), value(0, 1), value(0, 0)};
}

std::array<bool, 9> Hive::rhombus_checks() const {
  const auto& h = *this;
  // ordered to line up with check_inequalities entry by entry
  return {
      h.value(1, 0) + h.value(1, 1) >= h.value(2, 0) + h.value(0, 1),
      h.value(2, 0) + h.value(2, 1) >= h.value(3, 0) + h.value(1, 1),
      h.value(1, 1) + h.value(1, 2) >= h.value(2, 1) + h.value(0, 2),
      h.value(0, 2) + h.value(1, 1) >= h.value(0, 1) + h.value(1, 2),
      h.value(0, 1) + h.value(1, 0) >= h.value(0, 0) + h.value(1, 1),
      h.value(1, 1) + h.value(2, 0) >= h.value(1, 0) + h.value(2, 1),
      h.value(0, 2) + h.value(1, 2) >= h.value(0, 3) + h.value(1, 1),
      h.value(1, 1) + h.value(2, 1) >= h.value(1, 2) + h.value(2, 0),
      h.value(0, 1) + h.value(1, 1) >= h.value(0, 2) + h.value(1, 0),
  };
}

Hive to_hive(const Honeycomb& h) {
  const int l1 = h.lambda[0], l2 = h.lambda[1];
  const int m1 = h.mu[0], m2 = h.mu[1];
  const int x = l1 + 2 * l2 + m1 + 2 * m2;  // == n1 + 2 n2 + 3 n3
  Hive hv;
  hv.v[0] = {0, x - h.nu[1] - 2 * h.nu3, x - h.nu3, x};
  hv.v[1] = {l1 + l2, h.alpha, x, 0};
  hv.v[2] = {l1 + 2 * l2, l1 + 2 * l2 + m1 + m2, 0, 0};
  hv.v[3] = {l1 + 2 * l2, 0, 0, 0};
  return hv;
}

bool WesslenSystem::all_hold(const Weight& nu) const {
  for (const auto& f : forms)
    if (f.eval(nu[0], nu[1]) < 0) return false;
  return true;
}

std::vector<std::string> WesslenSystem::violated(const Weight& nu) const {
  std::vector<std::string> out;
  for (const auto& f : forms)
    if (f.eval(nu[0], nu[1]) < 0) out.push_back(f.name);
  return out;
}

WesslenSystem wesslen_bounds(const Weight& lambda, const Weight& mu) {
  if (lambda.rank() != 3 || mu.rank() != 3)
    throw RankError("wesslen_bounds requires SU(3) weights");
  const int l1 = lambda[0], l2 = lambda[1], m1 = mu[0], m2 = mu[1];
  WesslenSystem w;
  const auto add = [&](int c1, int c2, int c0, std::string name) {
    w.forms.push_back({c1, c2, c0, std::move(name)});
  };
  add(1, 0, 0, "nu1 >= 0");
  add(0, 1, 0, "nu2 >= 0");
  add(2, 1, l1 + 2 * l2 - 2 * m1 - m2, "2nu1+nu2 >= 2mu1+mu2-lam1-2lam2");
  add(2, 1, m1 + 2 * m2 - 2 * l1 - l2, "2nu1+nu2 >= 2lam1+lam2-mu1-2mu2");
  add(2, 1, l1 - l2 + m1 - m2, "2nu1+nu2 >= lam2-lam1+mu2-mu1");
  add(-2, -1, 2 * l1 + l2 + 2 * m1 + m2, "2nu1+nu2 <= 2lam1+lam2+2mu1+mu2");
  add(1, 2, 2 * m1 + m2 - l1 - 2 * l2, "nu1+2nu2 >= lam1+2lam2-2mu1-mu2");
  add(1, 2, 2 * l1 + l2 - m1 - 2 * m2, "nu1+2nu2 >= mu1+2mu2-2lam1-lam2");
  add(1, 2, l2 - l1 + m2 - m1, "nu1+2nu2 >= lam1-lam2+mu1-mu2");
  add(-1, -2, l1 + 2 * l2 + m1 + 2 * m2, "nu1+2nu2 <= lam1+2lam2+mu1+2mu2");
  add(1, -1, 2 * l1 + l2 - m1 + m2, "nu1-nu2 >= mu1-mu2-2lam1-lam2");
  add(1, -1, 2 * m1 + m2 - l1 + l2, "nu1-nu2 >= lam1-lam2-2mu1-mu2");
  add(-1, 1, l1 - l2 + m1 + 2 * m2, "nu1-nu2 <= lam1-lam2+mu1+2mu2");
  add(-1, 1, l1 + 2 * l2 + m1 - m2, "nu1-nu2 <= lam1+2lam2+mu1-mu2");
  return w;
}

}  // namespace liecomb::honeycomb
