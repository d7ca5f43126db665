#ifndef CURRENTS_FORM_HPP
#define CURRENTS_FORM_HPP

#include <memory>
#include <optional>
#include <vector>

#include "currents/cell.hpp"
#include "currents/fields.hpp"
#include "currents/geometry.hpp"

namespace currents {

class FormLike;
using FormPtr = std::shared_ptr<const FormLike>;

// A degree-p differential form exposed through coefficient evaluation on
// increasing multi-indices (combinations(m, p) order).
class FormLike : public std::enable_shared_from_this<FormLike> {
 public:
  virtual ~FormLike() = default;

  virtual int dimension() const = 0;
  virtual int degree() const = 0;

  // Fills combinations(dimension, degree).size() coefficients at x.
  virtual void coefficients(const Vec& x, double* out) const = 0;

  // Box outside which all coefficients vanish, when known.
  virtual std::optional<Box> support_box() const { return std::nullopt; }

  bool possibly_nonzero(const Box& region) const {
    auto s = support_box();
    return !s || s->intersects(region);
  }

  int coefficient_count() const;
  // Single coefficient by increasing mask.
  double coefficient(IndexMask mask, const Vec& x) const;
};

// Stored-coefficient form; the workhorse test-form type. Coefficients are
// kept for increasing multi-indices only; signed access handles the rest.
class SmoothForm : public FormLike {
 public:
  SmoothForm(int m, int p, std::vector<FieldPtr> coeffs,
             std::optional<Box> support = std::nullopt);

  static SmoothForm zero(int m, int p);
  static SmoothForm zero_form(int m, FieldPtr f,
                              std::optional<Box> support = std::nullopt);

  int dimension() const override { return m_; }
  int degree() const override { return p_; }
  void coefficients(const Vec& x, double* out) const override;
  std::optional<Box> support_box() const override { return support_; }

  const FieldPtr& coeff_field(IndexMask mask) const;
  // Signed access for an arbitrary index tuple (0 when indices repeat).
  double coeff_tuple(const std::vector<int>& tuple, const Vec& x) const;

  SmoothForm scaled(double s) const;
  friend SmoothForm operator+(const SmoothForm& a, const SmoothForm& b);

 private:
  int m_, p_;
  std::vector<FieldPtr> coeffs_;
  std::optional<Box> support_;
};

// d(phi): degree p+1, analytic partials where coefficients carry them.
SmoothForm exterior_derivative(const SmoothForm& phi);

// Wedge of two stored forms (materialized; used by tests and the runner).
SmoothForm wedge(const SmoothForm& a, const SmoothForm& b);

// --------------------------------------------------------------- combinators

// Pointwise scale of any form by a scalar field.
FormPtr make_field_scaled_form(FormPtr base, FieldPtr factor);
// Sum of forms of equal dimension/degree.
FormPtr make_sum_form(std::vector<FormPtr> parts);

// ------------------------------------------------------------ cell pullback

// Value at parameter u of the pullback to `cell` of the wedge of `factors`
// (degrees must sum to cell.k). Jacobian minors are computed once per call.
double pullback_wedge_value(const Cell& cell, const Vec& u,
                            const std::vector<const FormLike*>& factors);

// Integral over R^m of the wedge of `factors` (degrees summing to m),
// over the given region box.
double wedge_integral_over_box(int m, const Box& region,
                               const std::vector<const FormLike*>& factors,
                               const struct QuadratureOptions& opts);

}  // namespace currents

#endif
