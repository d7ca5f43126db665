#ifndef CURRENTS_BUMP_HPP
#define CURRENTS_BUMP_HPP

#include <functional>
#include <string>
#include <vector>

#include "currents/geometry.hpp"

namespace currents {

// Normalized mollifier profile f on R^m: nonnegative, supported in the ball
// of support_radius, integral 1.
struct BumpProfile {
  int dimension = 0;
  std::string name;
  std::function<double(const Vec&)> raw;  // unnormalized profile
  double support_radius = 1.0;            // euclidean, profile coordinates
  double normalization = 1.0;             // integral of raw
  bool symmetric = true;

  double value(const Vec& x) const { return raw(x) / normalization; }

  // f^eps(x) = eps^-m f(x/eps)
  double scaled(const Vec& x, double eps) const {
    Vec y(x.size());
    for (int i = 0; i < x.size(); ++i) y[i] = x[i] / eps;
    double s = raw(y);
    if (s == 0.0) return 0.0;
    return s / (normalization * std::pow(eps, dimension));
  }
};

// exp(1/(|x|^2-1)) inside the unit ball, numerically normalized. Symmetric.
BumpProfile make_smooth_radial(int m);

// (1-|x|^2)_+^4, numerically normalized. Symmetric and cheaper to evaluate.
BumpProfile make_poly4(int m);

// Smooth radial profile recentred at `center` with the given ball radius;
// asymmetric whenever center != 0. |center| + radius must stay within the
// unit ball.
BumpProfile make_skewed_radial(int m, const Vec& center, double radius);

// Product profile f1(x')f2(x'') for a product space (factor dimensions add).
// Its support radius is sqrt(r1^2+r2^2), which may exceed 1.
BumpProfile make_product_bump(const BumpProfile& f1, const BumpProfile& f2);

// Named registry used by scenario files and the CLI.
struct BumpSpec {
  std::string profile;       // smooth-radial | poly4 | skewed-radial
  Vec center;                // skewed-radial only
  double radius = 0.5;       // skewed-radial only
};
BumpProfile make_bump(int m, const BumpSpec& spec);
std::vector<std::string> builtin_bump_names();

// Construction-time checks: nonnegativity and symmetry sampling, integral 1.
void validate_bump(const BumpProfile& f);

}  // namespace currents

#endif
