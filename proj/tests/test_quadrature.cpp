#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "currents/quadrature.hpp"

using namespace currents;

TEST_CASE("gauss-legendre weights sum to one") {
  for (int n : {4, 8, 16, 24}) {
    const auto& w = gl_weights(n);
    double s = 0;
    for (double x : w) s += x;
    CHECK(s == doctest::Approx(1.0).epsilon(1e-13));
  }
}

TEST_CASE("smooth 1-d integral") {
  Box dom = Box::cube(1, 0.0, 1.0);
  double v = integrate_scalar(dom, [](const Vec& x) {
    return std::cos(x[0]) * x[0];
  });
  // integral of x cos x over [0,1]
  double expect = std::cos(1.0) + std::sin(1.0) - 1.0;
  CHECK(v == doctest::Approx(expect).epsilon(1e-12));
}

TEST_CASE("2-d polynomial is exact") {
  Box dom = Box::cube(2, -1.0, 2.0);
  double v = integrate_scalar(dom, [](const Vec& x) {
    return x[0] * x[0] * x[1];
  });
  // int_{-1}^{2} x^2 dx * int_{-1}^{2} y dy = 3 * 1.5
  CHECK(v == doctest::Approx(4.5).epsilon(1e-13));
}

TEST_CASE("narrow peak needs the feature scale") {
  // bump of width 2e-3 inside [0,1]; a single coarse estimate misses it
  const double eps = 1e-3;
  const double c = 0.37;
  auto peak = [eps, c](const Vec& x) {
    double t = (x[0] - c) / eps;
    double r2 = t * t;
    if (r2 >= 1.0) return 0.0;
    return std::exp(1.0 / (r2 - 1.0)) / eps;
  };
  Box dom = Box::cube(1, 0.0, 1.0);
  QuadratureOptions opts;
  opts.rel_tol = 1e-10;
  opts.feature_scale = eps;
  double v = integrate_scalar(dom, peak, opts);
  // reference: substitute t=(x-c)/eps -> integral of exp(1/(t^2-1)) over [-1,1]
  double ref = integrate_scalar(Box::cube(1, -1.0, 1.0), [](const Vec& t) {
    double r2 = t[0] * t[0];
    if (r2 >= 1.0) return 0.0;
    return std::exp(1.0 / (r2 - 1.0));
  });
  CHECK(v == doctest::Approx(ref).epsilon(1e-8));
}

TEST_CASE("support pruning yields exact zeros") {
  Box dom = Box::cube(2, 0.0, 1.0);
  long calls = 0;
  Integrand f = [&calls](const Vec&, double* out) {
    ++calls;
    out[0] = 1.0;
  };
  SupportTest nothing = [](const Box&) { return false; };
  double out = -1;
  integrate_box(dom, 1, f, QuadratureOptions{}, nothing, &out);
  CHECK(out == 0.0);
  CHECK(calls == 0);
}

TEST_CASE("vector integrands converge componentwise") {
  Box dom = Box::cube(1, 0.0, 1.0);
  Integrand f = [](const Vec& x, double* out) {
    out[0] = x[0];
    out[1] = std::exp(x[0]);
  };
  double out[2];
  integrate_box(dom, 2, f, QuadratureOptions{}, SupportTest{}, out);
  CHECK(out[0] == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(out[1] == doctest::Approx(std::exp(1.0) - 1.0).epsilon(1e-12));
}
