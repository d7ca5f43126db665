#ifndef CURRENTS_CURRENT_HPP
#define CURRENTS_CURRENT_HPP

#include <memory>
#include <variant>
#include <vector>

#include "currents/cell.hpp"
#include "currents/form.hpp"
#include "currents/geometry.hpp"

namespace currents {

// Weighted points; degree m. Used mainly as an expected-output oracle value.
struct PointMassCurrent {
  int m = 0;
  std::vector<std::pair<Vec, double>> points;
};

// Lazy cylinder current on a product space: full `free` factor times a
// current on the other factor. Never materialized over the free factor.
struct CylinderCurrent;

// Sum type over the current kinds the engine evaluates and mollifies.
class Current {
 public:
  Current(CellChain chain);             // NOLINT(google-explicit-constructor)
  Current(SmoothForm form);             // NOLINT(google-explicit-constructor)
  Current(PointMassCurrent pm);         // NOLINT(google-explicit-constructor)
  Current(std::shared_ptr<const CylinderCurrent> cyl);  // NOLINT

  int dimension() const;         // k: degree of test forms it accepts
  int ambient_dimension() const; // m
  int degree() const { return ambient_dimension() - dimension(); }
  bool compact() const;
  double margin() const;
  Box bounding_box() const;

  bool is_chain() const { return std::holds_alternative<CellChain>(v_); }
  bool is_form() const { return std::holds_alternative<SmoothForm>(v_); }
  bool is_point_mass() const {
    return std::holds_alternative<PointMassCurrent>(v_);
  }
  bool is_cylinder() const;

  const CellChain& chain() const { return std::get<CellChain>(v_); }
  const SmoothForm& form() const { return std::get<SmoothForm>(v_); }
  const PointMassCurrent& point_mass() const {
    return std::get<PointMassCurrent>(v_);
  }
  const CylinderCurrent& cylinder() const;

  // Point masses re-expressed as a chain of 0-cells (constant maps).
  CellChain as_zero_cell_chain() const;

 private:
  std::variant<CellChain, SmoothForm, PointMassCurrent,
               std::shared_ptr<const CylinderCurrent>>
      v_;
};

struct CylinderCurrent {
  int m1 = 0, m2 = 0;   // factor dimensions
  int current_factor = 0;  // 0: current lives on factor 1; 1: on factor 2
  std::shared_ptr<const Current> factor_current;
  Box free_box;  // truncation of the free factor (tests/materialization only)
};

struct EvaluationOptions {
  double rel_tol = 1e-9;
  int nodes = 16;
};

// int_T phi by tensor Gauss-Legendre with pullback per cell; linear in both
// arguments. Requires deg(phi) = dim(T) and a support box on phi.
double evaluate(const Current& T, const FormLike& phi,
                const EvaluationOptions& opts = {});

// Chain-only convenience overload.
double evaluate_chain(const CellChain& T, const FormLike& phi,
                      const EvaluationOptions& opts = {});

}  // namespace currents

#endif
