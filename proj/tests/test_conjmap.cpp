#include <doctest.h>

#include "helpers.hpp"
#include "liecomb/conjmap.hpp"
#include "liecomb/honeycomb.hpp"
#include "liecomb/multiplicity.hpp"

using namespace liecomb;
using namespace liecomb::conjmap;

TEST_CASE("case classification of the figure pairs") {
  CHECK(classify(Weight::su3(10, 4), Weight::su3(7, 3)) == 1);
  CHECK(classify(Weight::su3(9, 4), Weight::su3(7, 5)) == 2);
  CHECK(classify(Weight::su3(6, 2), Weight::su3(5, 4)) == 3);
  // normalization: same answers with the pair swapped or jointly conjugated
  CHECK(classify(Weight::su3(7, 3), Weight::su3(10, 4)) == 1);
  CHECK(classify(Weight::su3(4, 10), Weight::su3(3, 7)) == 1);
  CHECK(classify(Weight::su3(5, 7), Weight::su3(4, 9)) == 2);
}

TEST_CASE("t1 reflection") {
  CHECK(t1(Weight::su3(9, 5), Weight::su3(15, 7)) == Weight::su3(1, 7));
  // involution
  for (int i = 0; i < 100; ++i) {
    const Weight l = test_helpers::random_su3(12);
    const Weight n = test_helpers::random_su3(12);
    if (2 * l[0] + l[1] - n[0] - n[1] < 0) continue;  // keep labels valid
    const Weight r = t1(l, n);
    CHECK(t1(l, r) == n);
    // fixed line: 2nu1+nu2 = 2(2l1+l2) - (2nu1'+nu2') pairs up
    CHECK(2 * n[0] + n[1] + 2 * r[0] + r[1] == 2 * (2 * l[0] + l[1]));
    CHECK(r[1] == n[1]);
  }
}

TEST_CASE("map_point on the worked product") {
  const Weight l = Weight::su3(9, 5), m = Weight::su3(6, 2);
  // H = (15,7) has multiplicity 1; its image under t1 is (1,7), the head of
  // the conjugate table
  const auto iv = honeycomb::alpha_bounds(l, m, Weight::su3(15, 7));
  const auto p = map_point(l, m, Weight::su3(15, 7), iv.lo);
  CHECK(p.nu_out == Weight::su3(1, 7));
  CHECK(p.index == 1);
  CHECK(p.index_out == 1);
  CHECK(mult(l, m.conjugate(), p.nu_out) > 0);
  CHECK_THROWS_AS(map_point(l, m, Weight::su3(15, 7), iv.lo - 1), OutOfRange);
  CHECK_THROWS_AS(map_point(l, m, Weight::su3(1, 0), 0), OutOfRange);
}

TEST_CASE("case 1 is pure reflection; cases 2 and 3 mix in translations") {
  const auto r1 = verify_bijection(Weight::su3(10, 4), Weight::su3(7, 3));
  CHECK(r1.passed());
  CHECK(r1.case_tag == 1);
  CHECK(r1.translations == 0);
  CHECK(r1.reflections == r1.total_points);

  const auto r2 = verify_bijection(Weight::su3(9, 4), Weight::su3(7, 5));
  CHECK(r2.passed());
  CHECK(r2.case_tag == 2);
  CHECK(r2.translations > 0);
  CHECK(r2.reflections > 0);

  const auto r3 = verify_bijection(Weight::su3(6, 2), Weight::su3(5, 4));
  CHECK(r3.passed());
  CHECK(r3.case_tag == 3);
  CHECK(r3.translations > 0);
  CHECK(r3.reflections > 0);
}

TEST_CASE("translation counts match the threshold predicates") {
  // for each admissible (nu, alpha), the regime is determined by the two
  // layer-shifted thresholds; recount them independently
  const struct {
    Weight l, m;
  } pairs[] = {{Weight::su3(9, 4), Weight::su3(7, 5)}, {Weight::su3(6, 2), Weight::su3(5, 4)}};
  for (const auto& [l, m] : pairs) {
    long long expected_translations = 0;
    for (const auto& e : decompose(l, m).entries) {
      const auto iv = honeycomb::alpha_bounds(l, m, e.nu);
      for (int a = iv.lo; a <= iv.hi; ++a) {
        const int mm = a - iv.lo + 1;
        const int n1 = e.nu[0], n2 = e.nu[1];
        if (2 * n1 + n2 > 5 * l[0] + 4 * l[1] - m[0] - 2 * m[1] - 3 * (mm - 1) ||
            n1 + n2 > 2 * l[0] + l[1] - (mm - 1))
          ++expected_translations;
      }
    }
    const auto rep = verify_bijection(l, m);
    CAPTURE(l.str() + " " + m.str());
    CHECK(rep.translations == expected_translations);
  }
}

TEST_CASE("bijection on the worked pair and a self-conjugate mu") {
  const auto rep = verify_bijection(Weight::su3(9, 5), Weight::su3(6, 2));
  CHECK(rep.passed());
  CHECK(rep.total_points == 95);

  // mu self-conjugate: the map permutes the point set of the product itself
  const auto self = verify_bijection(Weight::su3(7, 3), Weight::su3(4, 4));
  CHECK(self.passed());
  CHECK(self.total_points ==
        decompose(Weight::su3(7, 3), Weight::su3(4, 4)).total_multiplicity());
}

TEST_CASE("bijection on random pairs, all cases and pipelines") {
  for (int i = 0; i < 120; ++i) {
    const Weight l = test_helpers::random_su3(9), m = test_helpers::random_su3(9);
    const auto rep = verify_bijection(l, m);
    CAPTURE(l.str() + " " + m.str() + " " + rep.pipeline + " case " + std::to_string(rep.case_tag));
    CHECK(rep.passed());
  }
}

TEST_CASE("index preservation point by point") {
  const Weight l = Weight::su3(21, 6), m = Weight::su3(17, 16);
  const Weight n = Weight::su3(12, 8);
  const auto iv = honeycomb::alpha_bounds(l, m, n);
  for (int a = iv.lo; a <= iv.hi; ++a) {
    const auto p = map_point(l, m, n, a);
    CHECK(p.index == a - iv.lo + 1);
    CHECK(p.index_out == p.index);
    const auto iv_out = honeycomb::alpha_bounds(l, m.conjugate(), p.nu_out);
    CHECK(p.alpha_out - iv_out.lo + 1 == p.index);
  }
}
