#include "currents/current.hpp"

#include <cmath>

#include "currents/errors.hpp"
#include "currents/quadrature.hpp"

namespace currents {

Current::Current(CellChain chain) : v_(std::move(chain)) {}
Current::Current(SmoothForm form) : v_(std::move(form)) {}
Current::Current(PointMassCurrent pm) : v_(std::move(pm)) {}
Current::Current(std::shared_ptr<const CylinderCurrent> cyl)
    : v_(std::move(cyl)) {}

bool Current::is_cylinder() const {
  return std::holds_alternative<std::shared_ptr<const CylinderCurrent>>(v_);
}

const CylinderCurrent& Current::cylinder() const {
  return *std::get<std::shared_ptr<const CylinderCurrent>>(v_);
}

int Current::ambient_dimension() const {
  if (is_chain()) return chain().m;
  if (is_form()) return form().dimension();
  if (is_point_mass()) return point_mass().m;
  const auto& c = cylinder();
  return c.m1 + c.m2;
}

int Current::dimension() const {
  if (is_chain()) return chain().k;
  if (is_form()) return form().dimension() - form().degree();
  if (is_point_mass()) return 0;
  const auto& c = cylinder();
  int free_dim = c.current_factor == 0 ? c.m2 : c.m1;
  return c.factor_current->dimension() + free_dim;
}

bool Current::compact() const {
  if (is_chain()) return chain().compact_flag;
  if (is_form()) return form().support_box().has_value();
  if (is_point_mass()) return true;
  return false;  // cylinders extend over the free factor
}

double Current::margin() const {
  if (is_chain()) return chain().margin;
  if (is_cylinder()) return cylinder().factor_current->margin();
  return std::numeric_limits<double>::infinity();
}

Box Current::bounding_box() const {
  if (is_chain()) return chain().bounding_box();
  if (is_form()) {
    auto s = form().support_box();
    if (s) return *s;
    return Box::cube(form().dimension(), -1e30, 1e30);
  }
  if (is_point_mass()) {
    const auto& pm = point_mass();
    Box b = Box::cube(pm.m, 0, 0);
    if (!pm.points.empty()) {
      b.lo = pm.points[0].first;
      b.hi = pm.points[0].first;
      for (const auto& [x, c] : pm.points) {
        (void)c;
        for (int i = 0; i < pm.m; ++i) {
          b.lo[i] = std::min(b.lo[i], x[i]);
          b.hi[i] = std::max(b.hi[i], x[i]);
        }
      }
    }
    return b;
  }
  const auto& c = cylinder();
  Box fb = c.factor_current->bounding_box();
  Box out = Box::cube(c.m1 + c.m2, 0, 0);
  for (int i = 0; i < c.m1 + c.m2; ++i) {
    bool in_first = i < c.m1;
    bool current_here = (c.current_factor == 0) == in_first;
    int local = in_first ? i : i - c.m1;
    if (current_here) {
      out.lo[i] = fb.lo[local];
      out.hi[i] = fb.hi[local];
    } else {
      out.lo[i] = c.free_box.lo[local];
      out.hi[i] = c.free_box.hi[local];
    }
  }
  return out;
}

CellChain Current::as_zero_cell_chain() const {
  const auto& pm = point_mass();
  CellChain c;
  c.m = pm.m;
  c.k = 0;
  for (const auto& [x, w] : pm.points) {
    Cell cell;
    cell.m = pm.m;
    cell.k = 0;
    for (int i = 0; i < pm.m; ++i)
      cell.comps.push_back(Polynomial::constant(0, x[i]));
    cell.weight = std::abs(w);
    cell.orientation = w >= 0 ? 1 : -1;
    if (w != 0.0) c.cells.push_back(std::move(cell));
  }
  return c;
}

namespace {

double integrate_pullback_over_cell(const Cell& cell,
                                    const std::vector<const FormLike*>& forms,
                                    const QuadratureOptions& opts,
                                    const SupportTest& support) {
  Integrand f = [&](const Vec& u, double* out) {
    out[0] = pullback_wedge_value(cell, u, forms);
  };
  double out = 0;
  integrate_box(Box::unit(cell.k), 1, f, opts, support, &out);
  return out;
}

}  // namespace

double evaluate_chain(const CellChain& T, const FormLike& phi,
                      const EvaluationOptions& opts) {
  if (phi.dimension() != T.m)
    throw DimensionMismatch("test form lives in a different ambient space");
  if (phi.degree() != T.k)
    throw DimensionMismatch("deg(phi) must equal dim(T)");
  QuadratureOptions q;
  q.rel_tol = opts.rel_tol;
  q.nodes = opts.nodes;
  auto sup = phi.support_box();
  double total = 0.0;
  std::vector<const FormLike*> forms{&phi};
  for (const auto& cell : T.cells) {
    SupportTest support;
    if (sup) {
      const Cell* cp = &cell;
      Box sbox = *sup;
      support = [cp, sbox](const Box& ubox) {
        return cp->image_box(ubox).intersects(sbox);
      };
    }
    double v = integrate_pullback_over_cell(cell, forms, q, support);
    total += cell.weight * cell.orientation * v;
  }
  if (!std::isfinite(total))
    throw NonFiniteValue("evaluation produced a non-finite value");
  return total;
}

double evaluate(const Current& T, const FormLike& phi,
                const EvaluationOptions& opts) {
  if (T.is_chain()) return evaluate_chain(T.chain(), phi, opts);
  if (T.is_point_mass()) {
    if (phi.degree() != 0)
      throw DimensionMismatch("point masses evaluate 0-forms only");
    double s = 0;
    for (const auto& [x, c] : T.point_mass().points) {
      double v;
      phi.coefficients(x, &v);
      s += c * v;
    }
    if (!std::isfinite(s)) throw NonFiniteValue("evaluation not finite");
    return s;
  }
  if (T.is_form()) {
    const SmoothForm& alpha = T.form();
    int m = alpha.dimension();
    if (phi.degree() != m - alpha.degree())
      throw DimensionMismatch("deg(phi) must equal dim(T)");
    auto sa = alpha.support_box();
    auto sp = phi.support_box();
    Box region;
    if (sa && sp) {
      region = *sa;
      for (int i = 0; i < m; ++i) {
        region.lo[i] = std::max(region.lo[i], sp->lo[i]);
        region.hi[i] = std::min(region.hi[i], sp->hi[i]);
        if (region.lo[i] > region.hi[i]) return 0.0;
      }
    } else if (sp) {
      region = *sp;
    } else if (sa) {
      region = *sa;
    } else {
      throw ValidationError("evaluating a form current needs a support box");
    }
    QuadratureOptions q;
    q.rel_tol = opts.rel_tol;
    q.nodes = opts.nodes;
    std::vector<const FormLike*> forms{&alpha, &phi};
    return wedge_integral_over_box(m, region, forms, q);
  }
  throw ValidationError("cylinder currents are evaluated via product ops");
}

}  // namespace currents
