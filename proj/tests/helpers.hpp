#ifndef LIECOMB_TESTS_HELPERS_HPP
#define LIECOMB_TESTS_HELPERS_HPP

// Test-side oracles, kept independent of the library paths they check:
// a monotone-chain convex hull for the polygon comparisons and a plain
// 3-parameter search for pictograph fibers.

#include <algorithm>
#include <array>
#include <random>
#include <vector>

#include "liecomb/pictograph.hpp"
#include "liecomb/weights.hpp"

namespace test_helpers {

using Point = std::array<int, 2>;

inline long long cross(const Point& o, const Point& a, const Point& b) {
  return static_cast<long long>(a[0] - o[0]) * (b[1] - o[1]) -
         static_cast<long long>(a[1] - o[1]) * (b[0] - o[0]);
}

// Convex hull, counterclockwise, collinear points dropped.
inline std::vector<Point> convex_hull(std::vector<Point> pts) {
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  if (pts.size() <= 2) return pts;
  std::vector<Point> h(2 * pts.size());
  size_t k = 0;
  for (size_t i = 0; i < pts.size(); ++i) {
    while (k >= 2 && cross(h[k - 2], h[k - 1], pts[i]) <= 0) --k;
    h[k++] = pts[i];
  }
  const size_t lower = k + 1;
  for (size_t i = pts.size() - 1; i-- > 0;) {
    while (k >= lower && cross(h[k - 2], h[k - 1], pts[i]) <= 0) --k;
    h[k++] = pts[i];
  }
  h.resize(k - 1);
  return h;
}

// Every valid pictograph with the given externals, found by looping over
// the three independent labels (m13, n13, l13); everything else is forced
// by the external sums.
inline std::vector<liecomb::pictograph::NineLabels> brute_force_pictographs(
    const liecomb::Weight& lambda, const liecomb::Weight& mu, const liecomb::Weight& nu) {
  using liecomb::pictograph::NineLabels;
  std::vector<NineLabels> out;
  const int l1 = lambda[0], l2 = lambda[1];
  const int m1 = mu[0], m2 = mu[1];
  const int n1 = nu[0], n2 = nu[1];
  for (int m13 = 0; m13 <= std::min(l1, n1); ++m13)
    for (int n13 = 0; n13 <= std::min(l2, m1); ++n13)
      for (int l13 = 0; l13 <= std::min(m2, n2); ++l13) {
        NineLabels q;
        q.m13 = m13;
        q.n13 = n13;
        q.l13 = l13;
        q.n12 = l1 - m13;
        q.l23 = n1 - m13;
        q.m23 = l2 - n13;
        q.l12 = m1 - n13;
        q.n23 = m2 - l13;
        q.m12 = n2 - l13;
        if (q.nonnegative() && q.hexagon_ok()) out.push_back(q);
      }
  std::sort(out.begin(), out.end());
  return out;
}

inline std::mt19937& rng() {
  static std::mt19937 gen(20240817u);
  return gen;
}

inline liecomb::Weight random_su3(int max_label) {
  std::uniform_int_distribution<int> d(0, max_label);
  return liecomb::Weight::su3(d(rng()), d(rng()));
}

}  // namespace test_helpers

#endif
