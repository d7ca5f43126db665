#include "currents/bump.hpp"

#include <cmath>
#include <random>

#include "currents/errors.hpp"
#include "currents/quadrature.hpp"

namespace currents {

namespace {

// Mass of a radial profile g(|x|) supported in radius R:
// surface(S^{m-1}) * int_0^R g(r) r^{m-1} dr.
double radial_mass(int m, double R, const std::function<double(double)>& g) {
  double surf = 2.0 * std::pow(M_PI, 0.5 * m) / std::tgamma(0.5 * m);
  Box dom = Box::cube(1, 0.0, R);
  QuadratureOptions opts;
  opts.rel_tol = 1e-12;
  opts.nodes = 24;
  double n = surf * integrate_scalar(
                        dom,
                        [&](const Vec& r) {
                          return g(r[0]) * std::pow(r[0], m - 1);
                        },
                        opts);
  if (!(n > 0)) throw ValidationError("bump profile has nonpositive mass");
  return n;
}

}  // namespace

BumpProfile make_smooth_radial(int m) {
  BumpProfile f;
  f.dimension = m;
  f.name = "smooth-radial";
  f.support_radius = 1.0;
  f.symmetric = true;
  f.raw = [](const Vec& x) {
    double r2 = x.norm2();
    if (r2 >= 1.0) return 0.0;
    return std::exp(1.0 / (r2 - 1.0));
  };
  f.normalization = radial_mass(m, 1.0, [](double r) {
    double r2 = r * r;
    if (r2 >= 1.0) return 0.0;
    return std::exp(1.0 / (r2 - 1.0));
  });
  return f;
}

BumpProfile make_poly4(int m) {
  BumpProfile f;
  f.dimension = m;
  f.name = "poly4";
  f.support_radius = 1.0;
  f.symmetric = true;
  f.raw = [](const Vec& x) {
    double t = 1.0 - x.norm2();
    if (t <= 0.0) return 0.0;
    double t2 = t * t;
    return t2 * t2;
  };
  f.normalization = radial_mass(m, 1.0, [](double r) {
    double t = 1.0 - r * r;
    if (t <= 0.0) return 0.0;
    double t2 = t * t;
    return t2 * t2;
  });
  return f;
}

BumpProfile make_skewed_radial(int m, const Vec& center, double radius) {
  if (center.size() != m)
    throw DimensionMismatch("skewed bump center dimension");
  if (center.norm() + radius > 1.0 + 1e-12)
    throw ValidationError("skewed bump support leaves the unit ball");
  BumpProfile f;
  f.dimension = m;
  f.name = "skewed-radial";
  f.support_radius = center.norm() + radius;
  f.symmetric = false;
  Vec c = center;
  double r = radius;
  f.raw = [c, r](const Vec& x) {
    double rho2 = 0;
    for (int i = 0; i < c.size(); ++i) {
      double d = (x[i] - c[i]) / r;
      rho2 += d * d;
    }
    if (rho2 >= 1.0) return 0.0;
    return std::exp(1.0 / (rho2 - 1.0));
  };
  // recentring does not change the integral; reuse the radial reduction in
  // the profile's own coordinates
  f.normalization = radial_mass(m, 1.0, [](double r) {
                      double r2 = r * r;
                      if (r2 >= 1.0) return 0.0;
                      return std::exp(1.0 / (r2 - 1.0));
                    }) *
                    std::pow(radius, m);
  return f;
}

BumpProfile make_product_bump(const BumpProfile& f1, const BumpProfile& f2) {
  BumpProfile f;
  f.dimension = f1.dimension + f2.dimension;
  f.name = f1.name + "*" + f2.name;
  f.support_radius = std::sqrt(f1.support_radius * f1.support_radius +
                               f2.support_radius * f2.support_radius);
  f.symmetric = f1.symmetric && f2.symmetric;
  int m1 = f1.dimension, m2 = f2.dimension;
  auto r1 = f1.raw, r2 = f2.raw;
  f.raw = [r1, r2, m1, m2](const Vec& x) {
    Vec a(m1), b(m2);
    for (int i = 0; i < m1; ++i) a[i] = x[i];
    for (int i = 0; i < m2; ++i) b[i] = x[m1 + i];
    double va = r1(a);
    if (va == 0.0) return 0.0;
    return va * r2(b);
  };
  // factor normalizations multiply exactly, keeping (2.57)-style
  // factorizations identities rather than approximations
  f.normalization = f1.normalization * f2.normalization;
  return f;
}

BumpProfile make_bump(int m, const BumpSpec& spec) {
  if (spec.profile == "smooth-radial") return make_smooth_radial(m);
  if (spec.profile == "poly4") return make_poly4(m);
  if (spec.profile == "skewed-radial") {
    Vec c = spec.center;
    if (c.size() == 0) {
      c = Vec(m);
      c[m - 1] = 0.3;
    }
    return make_skewed_radial(m, c, spec.radius);
  }
  throw ValidationError("unknown bump profile: " + spec.profile);
}

std::vector<std::string> builtin_bump_names() {
  return {"smooth-radial", "poly4", "skewed-radial"};
}

void validate_bump(const BumpProfile& f) {
  if (f.dimension <= 0) throw ValidationError("bump dimension must be positive");
  if (!(f.support_radius > 0))
    throw ValidationError("bump support radius must be positive");
  std::mt19937_64 rng(17);
  std::uniform_real_distribution<double> u(-f.support_radius, f.support_radius);
  for (int s = 0; s < 512; ++s) {
    Vec x(f.dimension);
    for (int i = 0; i < f.dimension; ++i) x[i] = u(rng);
    double v = f.value(x);
    if (v < 0) throw ValidationError("bump profile is negative at a sample");
    if (!std::isfinite(v)) throw ValidationError("bump profile is not finite");
    if (f.symmetric) {
      Vec nx(f.dimension);
      for (int i = 0; i < f.dimension; ++i) nx[i] = -x[i];
      if (std::abs(f.value(nx) - v) > 1e-12 * std::max(1.0, std::abs(v)))
        throw ValidationError("bump profile flagged symmetric but is not");
    }
    if (x.norm() > f.support_radius && v != 0.0)
      throw ValidationError("bump profile leaks outside its support radius");
  }
  Box dom = Box::cube(f.dimension, -f.support_radius, f.support_radius);
  QuadratureOptions opts;
  opts.rel_tol = 1e-9;
  double mass = integrate_scalar(
      dom, [&f](const Vec& x) { return f.value(x); }, opts);
  if (std::abs(mass - 1.0) > 1e-7)
    throw ValidationError("bump profile does not integrate to 1");
}

}  // namespace currents
