#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "currents/geometry.hpp"
#include "currents/polynomial.hpp"

using namespace currents;

TEST_CASE("merge sign counts inversions") {
  // dx2 ^ dx1 = -dx1^dx2
  CHECK(merge_sign(0b10, 0b01) == -1);
  CHECK(merge_sign(0b01, 0b10) == 1);
  // dx3^dx4 ^ dx1^dx2 in R^4 is an even block swap
  CHECK(merge_sign(0b1100, 0b0011) == 1);
  CHECK(complement_sign(0b01, 2) == 1);   // dx1 ^ dx2
  CHECK(complement_sign(0b10, 2) == -1);  // dx2 ^ dx1
}

TEST_CASE("combinations enumerate lexicographically") {
  const auto& c = combinations(4, 2);
  CHECK(c.size() == 6);
  CHECK(c[0] == 0b0011);
  CHECK(c[5] == 0b1100);
  CHECK(combination_position(4, 2, 0b1010) >= 0);
  CHECK(combinations(3, 0).size() == 1);
  CHECK(combinations(2, 3).empty());
}

TEST_CASE("tuple sign and repeated indices") {
  IndexMask m = 0;
  CHECK(tuple_sign({1, 0}, &m) == -1);
  CHECK(m == 0b11);
  CHECK(tuple_sign({0, 1, 2}, &m) == 1);
  CHECK(tuple_sign({0, 0}, &m) == 0);
}

TEST_CASE("small determinants") {
  double m2[] = {1, 2, 3, 4};
  CHECK(det_small(m2, 2) == doctest::Approx(-2.0));
  double m3[] = {2, 0, 0, 0, 3, 0, 0, 0, 4};
  CHECK(det_small(m3, 3) == doctest::Approx(24.0));
  double m4[] = {1, 0, 0, 0, 0, 2, 0, 0, 0, 0, 3, 0, 0, 0, 1, 4};
  CHECK(det_small(m4, 4) == doctest::Approx(24.0));
}

TEST_CASE("box distance helpers") {
  Box b = Box::cube(2, 0.0, 1.0);
  CHECK(b.dist2(Vec{0.5, 0.5}) == 0.0);
  CHECK(b.dist2(Vec{2.0, 0.5}) == doctest::Approx(1.0));
  Box c = Box::cube(2, 2.0, 3.0);
  CHECK(b.gap2(c) == doctest::Approx(2.0));
  CHECK(!b.intersects(c));
}

TEST_CASE("polynomial arithmetic and intervals") {
  // p(u, v) = u^2 v - 2 v
  Polynomial p(2);
  p.add_term(1.0, {2, 1});
  p.add_term(-2.0, {0, 1});
  Vec u{3.0, 0.5};
  CHECK(p.eval(u) == doctest::Approx(3.5));
  Polynomial du = p.partial(0);
  CHECK(du.eval(u) == doctest::Approx(3.0));

  Box dom = Box::cube(2, 0.0, 1.0);
  Interval r = p.eval_interval(dom);
  CHECK(r.lo <= -1.0);
  CHECK(r.hi >= 0.0);

  Polynomial q = p * p;
  CHECK(q.eval(u) == doctest::Approx(3.5 * 3.5));

  // compose p with (t, t)
  Polynomial t = Polynomial::variable(1, 0);
  Polynomial comp = p.compose({t, t});
  CHECK(comp.eval(Vec{2.0}) == doctest::Approx(8.0 - 4.0));

  Polynomial sub = p.substitute(1, 0.5);
  CHECK(sub.nvars() == 1);
  CHECK(sub.eval(Vec{3.0}) == doctest::Approx(3.5));
}
