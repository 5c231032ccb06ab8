#include "liecomb/polygon.hpp"

#include <algorithm>
#include <numeric>

namespace liecomb::polygon {

namespace {

void require_su3(const Weight& w, const char* op) {
  if (w.rank() != 3)
    throw RankError(std::string(op) + " requires SU(3) weights");
}

long long cross(const Point& o, const Point& a, const Point& b) {
  return static_cast<long long>(a[0] - o[0]) * (b[1] - o[1]) -
         static_cast<long long>(a[1] - o[1]) * (b[0] - o[0]);
}

// Normalization to lambda1 = max of the four labels: optionally swap the
// pair, optionally conjugate both.  Applied before the edge recipe and
// undone on the resulting coordinates.
struct Frame {
  bool swapped = false;
  bool conjugated = false;
  Weight lambda, mu;
};

Frame normalize(const Weight& lambda, const Weight& mu) {
  const int c[4] = {lambda[0], mu[0], lambda[1], mu[1]};
  const int top = *std::max_element(c, c + 4);
  for (const bool conj : {false, true})
    for (const bool swap : {false, true}) {
      Weight l = swap ? mu : lambda, m = swap ? lambda : mu;
      if (conj) {
        l = l.conjugate();
        m = m.conjugate();
      }
      if (l[0] == top) return {swap, conj, l, m};
    }
  throw Error("unreachable: some label is maximal");
}

// The eight oriented edges of the outer polygon, clockwise from H.
// Directions are fixed; lengths depend piecewise on the labels.
std::vector<Point> outer_vertices_normalized(const Weight& lambda, const Weight& mu) {
  const int l1 = lambda[0], l2 = lambda[1], m1 = mu[0], m2 = mu[1];
  const struct {
    int len;
    Point dir;
  } edges[8] = {
      {std::min(l2, m2), {1, -2}},
      {std::abs(std::min(l2 - m2, m1)), {-1, -1}},
      {std::max(std::min({l1, l2, m1, m2, m1 + m2 - l2}), 0), {-3, 0}},
      {m1 > l2 ? std::min(l1 - m2, m1 - l2) : std::abs(std::min(l2 - m1, m2)), {-2, 1}},
      {std::abs(std::min(l1 - m1 - m2, 0) + std::min(l2, m1)), {-1, 2}},
      {std::max(std::min(l2, m1 + m2 - l1), 0), {0, 3}},
      {std::abs(std::min(l1 - m1, m2)), {1, 1}},
      {m1, {2, -1}},
  };
  std::vector<Point> vs;
  Point p = {l1 + m1, l2 + m2};  // H
  for (const auto& e : edges) {
    vs.push_back(p);
    p[0] += e.len * e.dir[0];
    p[1] += e.len * e.dir[1];
  }
  if (p != vs.front()) throw Error("tensor polygon failed to close");
  // merge zero-length edges, preserving cyclic order
  std::vector<Point> out;
  for (const auto& v : vs)
    if (out.empty() || out.back() != v) out.push_back(v);
  while (out.size() > 1 && out.front() == out.back()) out.pop_back();
  return out;
}

std::vector<Point> denormalize(std::vector<Point> vs, const Frame& f) {
  if (f.conjugated) {
    for (auto& v : vs) std::swap(v[0], v[1]);
    // reflection flips orientation; restore clockwise order
    if (vs.size() > 2) std::reverse(vs.begin() + 1, vs.end());
  }
  return vs;
}

}  // namespace

bool TensorPolygon::contains(const Point& p) const {
  if (vertices.empty()) return false;
  if (vertices.size() == 1) return vertices[0] == p;
  if (vertices.size() == 2) {
    const Point &a = vertices[0], &b = vertices[1];
    if (cross(a, b, p) != 0) return false;
    const long long t = static_cast<long long>(p[0] - a[0]) * (b[0] - a[0]) +
                        static_cast<long long>(p[1] - a[1]) * (b[1] - a[1]);
    const long long len2 = static_cast<long long>(b[0] - a[0]) * (b[0] - a[0]) +
                           static_cast<long long>(b[1] - a[1]) * (b[1] - a[1]);
    return t >= 0 && t <= len2;
  }
  for (size_t i = 0; i < vertices.size(); ++i) {
    const Point& a = vertices[i];
    const Point& b = vertices[(i + 1) % vertices.size()];
    if (cross(a, b, p) > 0) return false;  // clockwise polygon
  }
  return true;
}

std::vector<Point> TensorPolygon::boundary_lattice_points() const {
  // Points of the product's weight lattice Q + lambda + mu lying on the
  // boundary.  Edges in the (-3,0) and (0,3) directions pass through
  // integer points of the wrong triality; those are not weights and are
  // filtered out.
  const int tau = (detail::triality3(lambda[0], lambda[1]) + detail::triality3(mu[0], mu[1])) % 3;
  const auto on_lattice = [tau](const Point& p) {
    return ((p[0] + 2 * p[1]) % 3 + 3) % 3 == tau;
  };
  std::vector<Point> pts;
  if (vertices.empty()) return pts;
  if (vertices.size() == 1) return {vertices[0]};
  for (size_t i = 0; i < vertices.size(); ++i) {
    const Point& a = vertices[i];
    const Point& b = vertices[(i + 1) % vertices.size()];
    const int dx = b[0] - a[0], dy = b[1] - a[1];
    const int g = std::gcd(std::abs(dx), std::abs(dy));
    for (int k = 0; k < g; ++k) {
      const Point p = {a[0] + k * dx / g, a[1] + k * dy / g};
      if (on_lattice(p)) pts.push_back(p);
    }
  }
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  return pts;
}

long long TensorPolygon::doubled_area() const {
  long long a = 0;
  for (size_t i = 0; i < vertices.size(); ++i) {
    const Point& p = vertices[i];
    const Point& q = vertices[(i + 1) % vertices.size()];
    a += static_cast<long long>(p[0]) * q[1] - static_cast<long long>(q[0]) * p[1];
  }
  return a;
}

Weight hhw(const Weight& lambda, const Weight& mu) {
  require_su3(lambda, "hhw");
  require_su3(mu, "hhw");
  return Weight::su3(lambda[0] + mu[0], lambda[1] + mu[1]);
}

Weight lhw(const Weight& lambda, const Weight& mu) {
  require_su3(lambda, "lhw");
  require_su3(mu, "lhw");
  const Frame f = normalize(lambda, mu);
  const int l1 = f.lambda[0], l2 = f.lambda[1], m1 = f.mu[0], m2 = f.mu[1];
  Weight h;
  if (m1 - l2 < 0)
    h = Weight::su3(l1 - m2, l2 - m1);
  else if (l1 - m2 <= m1 - l2)
    h = Weight::su3(m1 + m2 - l1 - l2, l1 - m2);
  else
    h = Weight::su3(l1 + l2 - m1 - m2, m1 - l2);
  return f.conjugated ? h.conjugate() : h;
}

TensorPolygon outer_polygon(const Weight& lambda, const Weight& mu) {
  require_su3(lambda, "outer_polygon");
  require_su3(mu, "outer_polygon");
  const Frame f = normalize(lambda, mu);
  TensorPolygon p;
  p.layer = 1;
  p.lambda = lambda;
  p.mu = mu;
  p.vertices = denormalize(outer_vertices_normalized(f.lambda, f.mu), f);
  return p;
}

LayerDiagram layers(const Weight& lambda, const Weight& mu) {
  require_su3(lambda, "layers");
  require_su3(mu, "layers");
  LayerDiagram d;
  d.lambda = lambda;
  d.mu = mu;
  const int mmax = mult_max(lambda, mu);
  for (int m = 1; m <= mmax; ++m) {
    const int s = m - 1;  // shift by (m-1) rho
    const Weight ls = Weight::su3(lambda[0] - s, lambda[1] - s);
    const Weight ms = Weight::su3(mu[0] - s, mu[1] - s);
    TensorPolygon p = outer_polygon(ls, ms);
    for (auto& v : p.vertices) {
      v[0] += s;
      v[1] += s;
    }
    p.layer = m;
    p.lambda = lambda;
    p.mu = mu;
    d.layers.push_back(std::move(p));
  }
  return d;
}

}  // namespace liecomb::polygon
