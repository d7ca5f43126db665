#ifndef CURRENTS_QUADRATURE_HPP
#define CURRENTS_QUADRATURE_HPP

#include <functional>
#include <limits>
#include <vector>

#include "currents/geometry.hpp"

namespace currents {

// Gauss-Legendre nodes/weights on [0,1], cached per order.
const std::vector<double>& gl_nodes(int n);
const std::vector<double>& gl_weights(int n);

// Writes nout values at parameter u.
using Integrand = std::function<void(const Vec& u, double* out)>;

// Returns false when the integrand is identically zero on the box, letting a
// whole subtree be skipped (and contribute an exact 0).
using SupportTest = std::function<bool(const Box&)>;

struct QuadratureOptions {
  int nodes = 16;
  double rel_tol = 1e-7;
  double abs_tol = 0.0;
  // Boxes wider than 2*feature_scale are split before the convergence test
  // may accept them; keeps narrow mollifier peaks from slipping between
  // nodes of a coarse box.
  double feature_scale = std::numeric_limits<double>::infinity();
  int max_depth = 30;
  long max_estimates = 4'000'000;  // tensor-rule evaluations budget

  QuadratureOptions with_rel(double r) const {
    QuadratureOptions o = *this;
    o.rel_tol = r;
    return o;
  }
  QuadratureOptions with_feature(double f) const {
    QuadratureOptions o = *this;
    o.feature_scale = f;
    return o;
  }
  QuadratureOptions with_nodes(int n) const {
    QuadratureOptions o = *this;
    o.nodes = n;
    return o;
  }
};

// Adaptive tensor Gauss-Legendre over an axis-aligned box, dyadic bisection
// along the widest axis until two refinement levels agree. Accumulates into
// out[0..nout). Pruned regions contribute exact zeros.
void integrate_box(const Box& domain, int nout, const Integrand& f,
                   const QuadratureOptions& opts, const SupportTest& support,
                   double* out);

double integrate_scalar(const Box& domain,
                        const std::function<double(const Vec&)>& f,
                        const QuadratureOptions& opts = {},
                        const SupportTest& support = {});

}  // namespace currents

#endif
