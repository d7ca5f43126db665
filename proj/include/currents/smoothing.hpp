#ifndef CURRENTS_SMOOTHING_HPP
#define CURRENTS_SMOOTHING_HPP

#include <memory>
#include <vector>

#include "currents/chart.hpp"
#include "currents/current.hpp"
#include "currents/extrapolation.hpp"
#include "currents/form.hpp"
#include "currents/quadrature.hpp"

namespace currents {

struct SmoothingOptions {
  double rel_tol = 1e-8;
  int nodes = 12;
};

// Smooth-form representation of the mollified current: a sum of kernel and
// convolution pieces, plus whatever part of the chain the cutoffs left
// untouched (empty when the cutoffs cover the support; the composite is then
// smooth everywhere, otherwise only on the union of inner boxes).
class MollifiedForm : public FormLike {
 public:
  struct ResidualCell {
    Cell cell;
    FieldPtr density;  // product of (1 - g_i) factors along the gluing
  };

  MollifiedForm(int m, int degree, double eps, std::vector<FormPtr> pieces,
                std::vector<ResidualCell> residual, Box support);

  int dimension() const override { return m_; }
  int degree() const override { return degree_; }
  void coefficients(const Vec& x, double* out) const override;
  std::optional<Box> support_box() const override { return support_; }

  double epsilon() const { return eps_; }
  const std::vector<FormPtr>& pieces() const { return pieces_; }
  const std::vector<ResidualCell>& residual() const { return residual_; }

  // True when the leftover chain part provably vanishes on `region`
  // (rigorous cutoff range bounds, not sampling).
  bool residual_vanishes_on(const Box& region) const;

 private:
  int m_, degree_;
  double eps_;
  std::vector<FormPtr> pieces_;
  std::vector<ResidualCell> residual_;
  Box support_;
};

using MollifiedPtr = std::shared_ptr<const MollifiedForm>;

// Effective reach of the mollifier through chart distortion; the truncation
// margin of every participating chain must exceed it.
double mollifier_reach(double eps, const DeRhamData& data);

void check_epsilon(double eps, const DeRhamData& data, double margin);

// Single-chart smoothing r_eps: the kernel smooth form of the mollified
// current (chart 0 of `data`, no cutoffs).
MollifiedPtr regularize(const Current& T, double eps, const DeRhamData& data,
                        const SmoothingOptions& opts = {});

// Chart-by-chart gluing: T -> h_i^-1 r_eps h_i (g_i T) + (1 - g_i) T applied
// in declared chart order.
MollifiedPtr regularize_glued(const Current& T, double eps,
                              const DeRhamData& data,
                              const SmoothingOptions& opts = {});

// Dual mollification of a test form (the operator adjoint to the gluing,
// charts processed in reverse declared order).
FormPtr mollify_form(const SmoothForm& phi, double eps, const DeRhamData& data,
                     const SmoothingOptions& opts = {});

// (a_eps T)(phi): homotopy partner evaluated on a test form. Single identity
// chart only. deg(phi) = 0 contracts to nothing and returns exactly 0.
double homotopy_apply(const CellChain& T, const SmoothForm& phi, double eps,
                      const DeRhamData& data, const SmoothingOptions& opts = {});

// |T(r*phi) - T(phi) - (a_eps T)(d phi) - (a_eps bT)(phi)|
double homotopy_residual(const CellChain& T, const SmoothForm& phi, double eps,
                         const DeRhamData& data,
                         const SmoothingOptions& opts = {});

}  // namespace currents

#endif
