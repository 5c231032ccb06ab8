#include "liecomb/pictograph.hpp"

#include <algorithm>

namespace liecomb::pictograph {

const NineLabels kDelta = {-1, -1, 1, -1, -1, 1, -1, -1, 1};

bool NineLabels::nonnegative() const {
  const auto a = as_array();
  return std::all_of(a.begin(), a.end(), [](int v) { return v >= 0; });
}

bool NineLabels::hexagon_ok() const {
  return l12 + n23 == l23 + n12 && m12 + l23 == m23 + l12 && n12 + m23 == n23 + m12;
}

NineLabels NineLabels::operator+(const NineLabels& o) const {
  return {m12 + o.m12, m23 + o.m23, m13 + o.m13, n12 + o.n12, n23 + o.n23,
          n13 + o.n13, l12 + o.l12, l23 + o.l23, l13 + o.l13};
}

NineLabels NineLabels::operator*(int k) const {
  return {m12 * k, m23 * k, m13 * k, n12 * k, n23 * k, n13 * k, l12 * k, l23 * k, l13 * k};
}

std::array<Weight, 3> external_weights(const Pictograph& p) {
  const NineLabels& q = p.labels;
  if (!q.hexagon_ok()) throw Error("pictograph violates the hexagon constraint");
  return {Weight::su3(q.m13 + q.n12, q.m23 + q.n13),
          Weight::su3(q.n13 + q.l12, q.n23 + q.l13),
          Weight::su3(q.m13 + q.l23, q.m12 + q.l13)};
}

std::vector<Pictograph> enumerate(const Weight& lambda, const Weight& mu, const Weight& nu,
                                  Kind kind) {
  if (lambda.rank() != 3 || mu.rank() != 3 || nu.rank() != 3)
    throw RankError("pictographs are defined for SU(3) weights only");
  std::vector<Pictograph> out;
  if (!triality_conserved(lambda, mu, nu)) return out;
  const int l1 = lambda[0], l2 = lambda[1];
  const int m1 = mu[0], m2 = mu[1];
  const int n1 = nu[0], n2 = nu[1];
  const int n3 = (l1 + 2 * l2 + m1 + 2 * m2 - n1 - 2 * n2) / 3;
  const int sigma = n1 + n2 + n3;

  // With the externals fixed, everything is affine in a = n13 with slopes
  // matching Delta; non-negativity of the nine labels cuts an interval.
  const int a_lo = std::max({0, n3 - m2, m1 + l2 + m2 - sigma});
  const int a_hi = std::min({n3, l2, m1, n2 + 2 * n3 - l2 - m2,
                             m1 + l2 + m2 - n2 - n3, n2 + n3 - m2});
  if (a_lo > a_hi) return out;

  const auto at = [&](int a) {
    NineLabels q;
    q.n13 = a;
    q.n23 = n3 - a;
    q.n12 = n2 + 2 * n3 - l2 - m2 - a;
    q.l13 = m2 - n3 + a;
    q.l23 = m1 + l2 + m2 - n2 - n3 - a;
    q.l12 = m1 - a;
    q.m23 = l2 - a;
    q.m13 = n1 - m1 - l2 - m2 + n2 + n3 + a;
    q.m12 = n2 + n3 - m2 - a;
    return q;
  };

  const Pictograph extremal{kind, at(a_lo)};
  if (!extremal.labels.nonnegative() || !extremal.labels.hexagon_ok())
    throw Error("extremal pictograph construction failed");
  out.push_back(extremal);
  for (int k = 1; k <= a_hi - a_lo; ++k) out.push_back(step_delta(extremal, k));
  return out;
}

Components7 to_components(const Pictograph& p) {
  const NineLabels& q = p.labels;
  if (!q.hexagon_ok()) throw Error("pictograph violates the hexagon constraint");
  return {q.n13, q.n23, q.l13, q.l23, q.m13, q.m23, q.n12 - q.n23};
}

Pictograph from_components(const Components7& c, Kind kind) {
  NineLabels q;
  q.m12 = c.f + c.g;
  q.m23 = c.f;
  q.m13 = c.e;
  q.n12 = c.b + c.g;
  q.n23 = c.b;
  q.n13 = c.a;
  q.l12 = c.d + c.g;
  q.l23 = c.d;
  q.l13 = c.c;
  return {kind, q};
}

honeycomb::Honeycomb to_kt(const Pictograph& p) {
  const auto [lambda, mu, nu] = external_weights(p);
  const int alpha = lambda[0] + 2 * lambda[1] + mu[0] + mu[1] - p.labels.n13;
  return honeycomb::build(lambda, mu, nu, alpha);
}

Fundamentals fundamentals() {
  Fundamentals f;
  f.names = {"f(x)f*(x)1", "f*(x)f(x)1", "f(x)1(x)f*", "f*(x)1(x)f",
             "1(x)f*(x)f", "1(x)f(x)f*", "left-primitive", "right-primitive"};
  const NineLabels sets[8] = {
      {0, 0, 0, 1, 1, 0, 0, 0, 0},  // f (x) f* (x) 1
      {0, 0, 0, 0, 0, 1, 0, 0, 0},  // f* (x) f (x) 1
      {0, 0, 1, 0, 0, 0, 0, 0, 0},  // f (x) 1 (x) f*
      {1, 1, 0, 0, 0, 0, 0, 0, 0},  // f* (x) 1 (x) f
      {0, 0, 0, 0, 0, 0, 0, 0, 1},  // 1 (x) f* (x) f
      {0, 0, 0, 0, 0, 0, 1, 1, 0},  // 1 (x) f (x) f*
      {1, 0, 0, 1, 0, 0, 1, 0, 0},  // cube of (1,0)
      {0, 1, 0, 0, 1, 0, 0, 1, 0},  // cube of (0,1)
  };
  for (int i = 0; i < 8; ++i) f.items[static_cast<size_t>(i)] = {Kind::oblade, sets[i]};
  // f(x)f*(x)1 + f*(x)1(x)f + 1(x)f(x)f* - left - right = 0
  f.relation = {1, 0, 0, 1, 0, 1, -1, -1};
  return f;
}

Pictograph step_delta(const Pictograph& p, int k) {
  Pictograph out = p;
  out.labels = p.labels + kDelta * k;
  if (!out.labels.nonnegative())
    throw StepOutOfFiber("step of " + std::to_string(k) + " leaves the pictograph fiber");
  return out;
}

}  // namespace liecomb::pictograph
