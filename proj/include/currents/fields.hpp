#ifndef CURRENTS_FIELDS_HPP
#define CURRENTS_FIELDS_HPP

#include <functional>
#include <memory>
#include <optional>

#include "currents/geometry.hpp"
#include "currents/polynomial.hpp"

namespace currents {

class ScalarField;
using FieldPtr = std::shared_ptr<const ScalarField>;

// Scalar coefficient function on R^m. Implementations provide analytic
// partials where they exist; the fallback is a central difference.
// Always construct through the make_* factories (std::make_shared), so
// partial_field can safely alias *this.
class ScalarField : public std::enable_shared_from_this<ScalarField> {
 public:
  virtual ~ScalarField() = default;

  virtual double value(const Vec& x) const = 0;
  virtual double partial(const Vec& x, int i) const;
  virtual FieldPtr partial_field(int i) const;

  // Support box when the field is known to vanish outside one.
  virtual std::optional<Box> support() const { return std::nullopt; }

  // Rigorous enclosure of the field's range over a box; defaults to
  // "unknown". Used to prove residual cutoff products identically zero.
  virtual Interval range(const Box& box) const;
};

FieldPtr make_constant_field(double c);
FieldPtr make_polynomial_field(Polynomial p);
FieldPtr make_generic_field(std::function<double(const Vec&)> fn,
                            std::optional<Box> support = std::nullopt);
FieldPtr make_sum_field(FieldPtr a, FieldPtr b);
FieldPtr make_scaled_field(FieldPtr a, double s);
FieldPtr make_product_field(FieldPtr a, FieldPtr b);

// C-infinity plateau: 1 on the inner box, 0 outside the outer box, a smooth
// monotone ramp between them (per axis, multiplied).
FieldPtr make_plateau_field(const Box& inner, const Box& outer);

// C-infinity radial bump scaled to peak value 1 on the ball |x-c| < r.
FieldPtr make_bump_field(const Vec& center, double radius);

// The smooth step used by plateaus: 0 for t<=0, 1 for t>=1.
double smoothstep(double t);
double smoothstep_deriv(double t);

}  // namespace currents

#endif
