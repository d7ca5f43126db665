#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "currents/bump.hpp"
#include "currents/cell.hpp"
#include "currents/chart.hpp"
#include "currents/current.hpp"
#include "currents/errors.hpp"
#include "currents/form.hpp"
#include "currents/lebesgue.hpp"
#include "currents/library.hpp"

using namespace currents;

namespace {

Polynomial poly_const(int nvars, double c) { return Polynomial::constant(nvars, c); }

Polynomial poly_var(int nvars, int i) { return Polynomial::variable(nvars, i); }

}  // namespace

TEST_CASE("evaluate: unit segment against dx1") {
  CellChain seg = make_segment(Vec{0.0, 0.0}, Vec{1.0, 0.0});
  Box inner = Box::cube(2, -1.5, 1.5);
  SmoothForm phi = make_monomial_form(2, 0b01, poly_const(2, 1.0), inner, 0.5);
  CHECK(evaluate(seg, phi) == doctest::Approx(1.0).epsilon(1e-10));
}

TEST_CASE("evaluate: zero form gives zero") {
  CellChain seg = make_segment(Vec{0.0, 0.0}, Vec{1.0, 2.0});
  SmoothForm zero(2, 1,
                  {make_constant_field(0.0), make_constant_field(0.0)},
                  Box::cube(2, -3, 3));
  CHECK(evaluate(seg, zero) == 0.0);
}

TEST_CASE("evaluate: parabola arc examples with closed-form integrals") {
  CellChain par = make_monomial_curve(2, 2, 0, 1, 1.0);  // x1 = x2^2
  Box inner = Box::cube(2, -1.25, 1.25);
  // odd integrand: int t dt over (-1,1) = 0
  SmoothForm odd = make_monomial_form(2, 0b10, poly_var(2, 1), inner, 0.5);
  CHECK(evaluate(par, odd) == doctest::Approx(0.0).epsilon(1e-12));
  // int dx2 = 2
  SmoothForm dx2 = make_monomial_form(2, 0b10, poly_const(2, 1.0), inner, 0.5);
  CHECK(evaluate(par, dx2) == doctest::Approx(2.0).epsilon(1e-10));
  // int x2 dx1 = int t d(t^2) = int 2t^2 dt = 4/3
  SmoothForm x2dx1 = make_monomial_form(2, 0b01, poly_var(2, 1), inner, 0.5);
  CHECK(evaluate(par, x2dx1) == doctest::Approx(4.0 / 3.0).epsilon(1e-10));
}

TEST_CASE("evaluate is bilinear and flips with orientation") {
  CellChain a = make_segment(Vec{0.0, 0.0}, Vec{1.0, 0.5});
  CellChain b = make_monomial_curve(2, 3, 0, 1, 0.75);
  Box inner = Box::cube(2, -2.0, 2.0);
  std::mt19937_64 rng(42);
  SmoothForm phi = make_random_test_form(rng, 2, 1, inner, 0.5);

  CellChain combo = concat(a.scaled(2.5), b.scaled(-1.25));
  double lhs = evaluate(combo, phi);
  double rhs = 2.5 * evaluate(a, phi) - 1.25 * evaluate(b, phi);
  CHECK(lhs == doctest::Approx(rhs).epsilon(1e-12));

  CHECK(evaluate(a.reversed(), phi) == -evaluate(a, phi));

  SmoothForm psi = make_random_test_form(rng, 2, 1, inner, 0.5);
  SmoothForm sum = phi + psi;
  CHECK(evaluate(a, sum) ==
        doctest::Approx(evaluate(a, phi) + evaluate(a, psi)).epsilon(1e-12));
}

TEST_CASE("evaluate rejects degree mismatches") {
  CellChain seg = make_segment(Vec{0.0, 0.0}, Vec{1.0, 0.0});
  SmoothForm zeroform = make_plateau_window(2, Box::cube(2, -1, 1), 0.5);
  CHECK_THROWS_AS(evaluate(seg, zeroform), DimensionMismatch);
}

TEST_CASE("boundary of a square and b.b = 0") {
  // unit square cell in R^2
  Cell sq;
  sq.m = 2;
  sq.k = 2;
  sq.comps = {poly_var(2, 0), poly_var(2, 1)};
  CellChain square;
  square.m = 2;
  square.k = 2;
  square.cells.push_back(sq);

  CellChain edges = boundary(square);
  CHECK(edges.cells.size() == 4);
  CellChain nothing = boundary(edges);
  CHECK(nothing.cells.empty());

  // segment boundary: endpoint signs
  CellChain seg = make_segment(Vec{0.0, 0.0}, Vec{1.0, 0.0});
  CellChain ends = boundary(seg);
  REQUIRE(ends.cells.size() == 2);
  double signed_sum = 0;
  for (const auto& c : ends.cells) {
    Vec x = c.eval(Vec(0));
    signed_sum += c.orientation * x[0];
  }
  CHECK(signed_sum == doctest::Approx(1.0));  // +1 at x=1, -1 at x=0

  // 0-chain has empty boundary, not an error
  CellChain pts = ends;
  CHECK(boundary(pts).cells.empty());
}

TEST_CASE("closed oval cancels its faces exactly") {
  CellChain oval = make_oval(0.25, 0.5, 0.5, 0.25);
  CHECK(is_closed(oval));
  CHECK(boundary(oval).cells.empty());
}

TEST_CASE("Stokes: boundary pairing equals d-pairing") {
  Cell sq;
  sq.m = 2;
  sq.k = 2;
  // a curved patch: (u + 0.2 v^2, v)
  Polynomial x = poly_var(2, 0) + (poly_var(2, 1) * poly_var(2, 1)).scaled(0.2);
  sq.comps = {x, poly_var(2, 1)};
  CellChain patch;
  patch.m = 2;
  patch.k = 2;
  patch.cells.push_back(sq);

  std::mt19937_64 rng(7);
  Box inner = Box::cube(2, -2.0, 2.0);
  for (int trial = 0; trial < 3; ++trial) {
    SmoothForm phi = make_random_test_form(rng, 2, 1, inner, 0.5);
    double lhs = evaluate(boundary(patch), phi);
    double rhs = evaluate(patch, exterior_derivative(phi));
    CHECK(lhs == doctest::Approx(rhs).epsilon(1e-8));
  }
}

TEST_CASE("exterior derivative basic identities") {
  // phi = x1 dx2 -> d phi = dx1 ^ dx2
  Box inner = Box::cube(2, -1.0, 1.0);
  SmoothForm phi = make_monomial_form(2, 0b10, poly_var(2, 0), inner, 0.5);
  SmoothForm dphi = exterior_derivative(phi);
  Vec x{0.2, 0.3};
  double c;
  dphi.coefficients(x, &c);
  CHECK(c == doctest::Approx(1.0).epsilon(1e-9));

  // constant function -> d = 0
  SmoothForm cst = make_monomial_form(2, 0, poly_const(2, 3.0), inner, 0.5);
  SmoothForm dcst = exterior_derivative(cst);
  double cc[2];
  dcst.coefficients(x, cc);
  CHECK(cc[0] == doctest::Approx(0.0).epsilon(1e-12));
  CHECK(cc[1] == doctest::Approx(0.0).epsilon(1e-12));

  // 0-form x1 x2 -> x2 dx1 + x1 dx2
  SmoothForm f =
      make_monomial_form(2, 0, poly_var(2, 0) * poly_var(2, 1), inner, 0.5);
  SmoothForm df = exterior_derivative(f);
  double d[2];
  df.coefficients(x, d);
  CHECK(d[0] == doctest::Approx(0.3).epsilon(1e-9));
  CHECK(d[1] == doctest::Approx(0.2).epsilon(1e-9));

  // d of d vanishes within finite-difference tolerance
  SmoothForm ddf = exterior_derivative(df);
  double dd;
  ddf.coefficients(x, &dd);
  CHECK(std::abs(dd) < 1e-6);
}

TEST_CASE("degenerate cells are rejected") {
  Cell bad;
  bad.m = 2;
  bad.k = 1;
  bad.comps = {poly_const(1, 0.5), poly_const(1, 0.5)};  // constant map
  CHECK_THROWS_AS(validate_cell_immersed(bad), ValidationError);
}

TEST_CASE("point mass currents evaluate 0-forms") {
  PointMassCurrent pm;
  pm.m = 2;
  pm.points = {{Vec{0.0, 0.0}, 2.0}, {Vec{0.5, 0.0}, -1.0}};
  SmoothForm phi = make_plateau_window(2, Box::cube(2, -0.1, 0.1), 0.2);
  double v = evaluate(Current(pm), phi);
  CHECK(v == doctest::Approx(2.0).epsilon(1e-12));  // second point outside
}

TEST_CASE("lebesgue diagnostic flags the three shipped cases") {
  // x1-axis segment projected to x1: bounded density ~ 1
  CellChain flat = make_axis_segment(2, 0, -1.0, 1.0, Vec{0.0, 0.0});
  DensityReport r1 = lebesgue_diagnostic(flat, 0b01, 16);
  CHECK(!r1.suspect_atom);
  CHECK(!r1.integrable_singularity);
  CHECK(r1.max_density == doctest::Approx(1.0).epsilon(0.2));

  // x2-axis segment projected to x1: atom
  CellChain vertical = make_axis_segment(2, 1, -1.0, 1.0, Vec{0.0, 0.0});
  DensityReport r2 = lebesgue_diagnostic(vertical, 0b01, 16);
  CHECK(r2.suspect_atom);

  // parabola arc projected to x1: integrable singularity
  CellChain par = make_monomial_curve(2, 2, 0, 1, 1.0);
  DensityReport r3 = lebesgue_diagnostic(par, 0b01, 16);
  CHECK(!r3.suspect_atom);
  CHECK(r3.integrable_singularity);
}

TEST_CASE("bump profiles validate and normalize") {
  for (int m : {1, 2}) {
    BumpProfile f = make_smooth_radial(m);
    validate_bump(f);
    BumpProfile g = make_poly4(m);
    validate_bump(g);
  }
  Vec c{0.0, 0.3};
  BumpProfile s = make_skewed_radial(2, c, 0.55);
  validate_bump(s);
  CHECK(!s.symmetric);
  CHECK_THROWS_AS(make_skewed_radial(2, Vec{0.0, 0.8}, 0.5), ValidationError);
}

TEST_CASE("charts validate and invert") {
  Box inner = Box::cube(2, -1, 1);
  Box outer = Box::cube(2, -2, 2);
  Chart id = Chart::identity(2, inner, outer);
  id.validate();
  CHECK(id.is_identity());

  Chart aff = Chart::affine(2, {2.0, 0.5, 0.0, 1.0}, Vec{0.1, -0.2}, inner, outer);
  aff.validate();
  Vec x{0.3, 0.4};
  Vec y = aff.apply(x);
  CHECK(y[0] == doctest::Approx(2.0 * 0.3 + 0.5 * 0.4 + 0.1));
  Vec back = aff.apply_inverse(y);
  CHECK(back[0] == doctest::Approx(0.3));
  CHECK(back[1] == doctest::Approx(0.4));

  // orientation-reversing maps are rejected
  CHECK_THROWS_AS(Chart::affine(2, {-1.0, 0, 0, 1.0}, Vec{0.0, 0.0}, inner, outer),
                  ValidationError);

  DeRhamData d = make_single_chart_data(2, make_smooth_radial(2), inner, "d0");
  d.validate();
}
