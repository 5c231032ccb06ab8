#include <doctest.h>

#include <numeric>
#include <set>

#include "helpers.hpp"
#include "liecomb/multiplicity.hpp"
#include "liecomb/polygon.hpp"

using namespace liecomb;
using namespace liecomb::polygon;

namespace {

std::set<std::array<int, 2>> vertex_set(const TensorPolygon& p) {
  return {p.vertices.begin(), p.vertices.end()};
}

std::set<std::array<int, 2>> hull_of_mult_at_least(const Weight& l, const Weight& m, int layer) {
  std::vector<test_helpers::Point> pts;
  for (const auto& e : decompose(l, m).entries)
    if (e.mult >= layer) pts.push_back({e.nu[0], e.nu[1]});
  const auto hull = test_helpers::convex_hull(pts);
  return {hull.begin(), hull.end()};
}

}  // namespace

TEST_CASE("highest and lowest highest weights") {
  CHECK(hhw(Weight::su3(9, 5), Weight::su3(6, 2)) == Weight::su3(15, 7));
  CHECK(hhw(Weight::su3(21, 6), Weight::su3(17, 16)) == Weight::su3(38, 22));
  CHECK(mult(Weight::su3(21, 6), Weight::su3(17, 16), Weight::su3(38, 22)) == 1);

  CHECK(lhw(Weight::su3(9, 5), Weight::su3(6, 2)) == Weight::su3(6, 1));
  CHECK(lhw(Weight::su3(3, 3), Weight::su3(3, 3)) == Weight::su3(0, 0));
  SUBCASE("lhw minimizes the level over the decomposition") {
    for (int i = 0; i < 120; ++i) {
      const Weight l = test_helpers::random_su3(10), m = test_helpers::random_su3(10);
      CAPTURE(l.str() + " " + m.str());
      const Weight h = lhw(l, m);
      const auto table = decompose(l, m);
      CHECK(table.mult_of(h) > 0);
      int min_level = 1 << 20;
      for (const auto& e : table.entries) min_level = std::min(min_level, e.nu.level());
      CHECK(h.level() == min_level);
    }
  }
  // branch selection example: (10,4) (x) (7,3)
  CHECK(lhw(Weight::su3(10, 4), Weight::su3(7, 3)) == Weight::su3(10 + 4 - 7 - 3, 7 - 4));
}

TEST_CASE("outer polygon matches the convex hull of the occurring weights") {
  CHECK(vertex_set(outer_polygon(Weight::su3(9, 5), Weight::su3(6, 2))) ==
        hull_of_mult_at_least(Weight::su3(9, 5), Weight::su3(6, 2), 1));
  for (int i = 0; i < 150; ++i) {
    const Weight l = test_helpers::random_su3(10), m = test_helpers::random_su3(10);
    CAPTURE(l.str() + " " + m.str());
    CHECK(vertex_set(outer_polygon(l, m)) == hull_of_mult_at_least(l, m, 1));
  }
}

TEST_CASE("the conjugate pair gives a genuinely different hull") {
  // the outer shells of (5,3) (x) (4,2) and (x) (2,4) carry different
  // numbers of integer points on their sides, so no reflection can map
  // one onto the other (the weight counts on the boundary DO agree)
  const auto side_point_counts = [](const TensorPolygon& p) {
    std::vector<int> n;
    for (size_t i = 0; i < p.vertices.size(); ++i) {
      const auto& a = p.vertices[i];
      const auto& b = p.vertices[(i + 1) % p.vertices.size()];
      n.push_back(std::gcd(std::abs(b[0] - a[0]), std::abs(b[1] - a[1])));
    }
    std::sort(n.begin(), n.end());
    return n;
  };
  const auto a = outer_polygon(Weight::su3(5, 3), Weight::su3(4, 2));
  const auto b = outer_polygon(Weight::su3(5, 3), Weight::su3(2, 4));
  CHECK(vertex_set(a) != vertex_set(b));
  CHECK(side_point_counts(a) != side_point_counts(b));
  CHECK(a.boundary_lattice_points().size() == b.boundary_lattice_points().size());
}

TEST_CASE("edge closure and clockwise orientation") {
  for (int i = 0; i < 100; ++i) {
    const Weight l = test_helpers::random_su3(14), m = test_helpers::random_su3(14);
    const auto p = outer_polygon(l, m);
    CAPTURE(l.str() + " " + m.str());
    REQUIRE(!p.vertices.empty());
    CHECK(p.doubled_area() <= 0);  // clockwise (or degenerate)
    CHECK(p.contains({hhw(l, m)[0], hhw(l, m)[1]}));
    const Weight low = lhw(l, m);
    CHECK(p.contains({low[0], low[1]}));
  }
}

TEST_CASE("membership: mult > 0 iff inside-or-on with the right triality") {
  for (int i = 0; i < 60; ++i) {
    const Weight l = test_helpers::random_su3(8), m = test_helpers::random_su3(8);
    const auto p = outer_polygon(l, m);
    const int box = l.level() + m.level();
    for (int n1 = 0; n1 <= box; ++n1)
      for (int n2 = 0; n2 <= box - n1; ++n2) {
        const Weight n = Weight::su3(n1, n2);
        if (!triality_conserved(l, m, n)) continue;
        CAPTURE(l.str() + " " + m.str() + " " + n.str());
        CHECK((mult(l, m, n) > 0) == p.contains({n1, n2}));
      }
  }
}

TEST_CASE("matriochka layers") {
  SUBCASE("count and the worked censuses") {
    CHECK(layers(Weight::su3(21, 6), Weight::su3(17, 16)).layers.size() == 7);
    const auto d = layers(Weight::su3(9, 5), Weight::su3(6, 2));
    REQUIRE(d.layers.size() == 3);
    // boundary populations 21 and 16; the innermost holds the 14 mult-3 weights
    CHECK(d.layers[0].boundary_lattice_points().size() == 21);
    CHECK(d.layers[1].boundary_lattice_points().size() == 16);
    int inner = 0;
    for (const auto& e : decompose(Weight::su3(9, 5), Weight::su3(6, 2)).entries)
      if (d.layers[2].contains({e.nu[0], e.nu[1]})) ++inner;
    CHECK(inner == 14);
    CHECK(layers(Weight::su3(4, 0), Weight::su3(2, 7)).layers.size() == 1);
  }

  SUBCASE("recursion equals the direct hull, and boundaries carry mult == m") {
    for (int i = 0; i < 80; ++i) {
      const Weight l = test_helpers::random_su3(9), m = test_helpers::random_su3(9);
      CAPTURE(l.str() + " " + m.str());
      const auto d = layers(l, m);
      const auto table = decompose(l, m);
      const int mmax = mult_max(l, m);
      REQUIRE(static_cast<int>(d.layers.size()) == mmax);
      for (int layer = 1; layer <= mmax; ++layer) {
        const auto& poly = d.layers[static_cast<size_t>(layer - 1)];
        CHECK(vertex_set(poly) == hull_of_mult_at_least(l, m, layer));
        if (layer < mmax) {
          // every weight of multiplicity exactly `layer` is on the boundary,
          // and every boundary lattice point has that multiplicity
          std::set<std::array<int, 2>> exact;
          for (const auto& e : table.entries)
            if (e.mult == layer) exact.insert({e.nu[0], e.nu[1]});
          const auto boundary = poly.boundary_lattice_points();
          CHECK(exact == std::set<std::array<int, 2>>(boundary.begin(), boundary.end()));
        }
      }
      // nesting: every vertex of layer m+1 is inside-or-on layer m
      for (size_t k = 0; k + 1 < d.layers.size(); ++k)
        for (const auto& v : d.layers[k + 1].vertices) CHECK(d.layers[k].contains(v));
    }
  }
}

TEST_CASE("conjugating both inputs mirrors the polygon across the diagonal") {
  for (int i = 0; i < 60; ++i) {
    const Weight l = test_helpers::random_su3(10), m = test_helpers::random_su3(10);
    const auto p = outer_polygon(l, m);
    const auto q = outer_polygon(l.conjugate(), m.conjugate());
    std::set<std::array<int, 2>> mirrored;
    for (const auto& v : p.vertices) mirrored.insert({v[1], v[0]});
    CHECK(mirrored == vertex_set(q));
  }
}
