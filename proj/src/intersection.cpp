#include "currents/intersection.hpp"

#include <algorithm>
#include <cmath>

#include "currents/errors.hpp"
#include "currents/quadrature.hpp"

namespace currents {

namespace {

Box box_intersection(const Box& a, const Box& b) {
  Box r = a;
  for (int i = 0; i < a.dim(); ++i) {
    r.lo[i] = std::max(a.lo[i], b.lo[i]);
    r.hi[i] = std::min(a.hi[i], b.hi[i]);
    if (r.lo[i] > r.hi[i]) {
      r.lo[i] = 0.5 * (r.lo[i] + r.hi[i]);
      r.hi[i] = r.lo[i];
    }
  }
  return r;
}

void check_wedge_preconditions(const Current& T1, const Current& T2,
                               const SmoothForm& phi, const DeRhamData& data) {
  if (T1.ambient_dimension() != data.dimension ||
      T2.ambient_dimension() != data.dimension ||
      phi.dimension() != data.dimension)
    throw DimensionMismatch("ambient dimensions disagree");
  int want = T1.dimension() - T2.degree();
  if (want < 0)
    throw DegreeUnderflow("deg(phi) = dim(T1) - deg(T2) would be negative");
  if (phi.degree() != want)
    throw DimensionMismatch("test form degree must be dim(T1) - deg(T2)");
  if (!T1.compact() && !T2.compact())
    throw ValidationError("at least one factor must be compact");
}

// Wedge of the mollified factor(s) and phi over the cells of T1.
double integrate_over_chain(const CellChain& chain,
                            const std::vector<const FormLike*>& factors,
                            double feature_ambient, const WedgeOptions& opts) {
  // common support region of all factors with a known box
  std::optional<Box> region;
  for (const auto* f : factors) {
    auto s = f->support_box();
    if (!s) continue;
    region = region ? box_intersection(*region, *s) : *s;
  }
  QuadratureOptions q;
  q.rel_tol = opts.outer_rel;
  q.nodes = opts.nodes;
  double total = 0.0;
  for (const auto& cell : chain.cells) {
    SupportTest support;
    if (region) {
      const Cell* cp = &cell;
      Box r = *region;
      support = [cp, r](const Box& ubox) {
        return cp->image_box(ubox).intersects(r);
      };
      if (!cell.bounding_box().intersects(r)) continue;
    }
    QuadratureOptions qc = q;
    qc.feature_scale =
        feature_ambient / std::max(cell.jacobian_sup(), 1e-12);
    double v = 0;
    Integrand f = [&](const Vec& u, double* out) {
      out[0] = pullback_wedge_value(cell, u, factors);
    };
    integrate_box(Box::unit(cell.k), 1, f, qc, support, &v);
    total += cell.weight * cell.orientation * v;
  }
  if (!std::isfinite(total)) throw NonFiniteValue("wedge evaluation not finite");
  return total;
}

double wedge_with_factors(const Current& T1,
                          const std::vector<const FormLike*>& factors,
                          double feature_ambient, const WedgeOptions& opts) {
  if (T1.is_chain())
    return integrate_over_chain(T1.chain(), factors, feature_ambient, opts);
  if (T1.is_point_mass()) {
    CellChain zero_cells = T1.as_zero_cell_chain();
    return integrate_over_chain(zero_cells, factors, feature_ambient, opts);
  }
  if (T1.is_form()) {
    const SmoothForm& alpha = T1.form();
    int m = alpha.dimension();
    std::vector<const FormLike*> all{&alpha};
    for (const auto* f : factors) all.push_back(f);
    std::optional<Box> region = alpha.support_box();
    for (const auto* f : all) {
      auto s = f->support_box();
      if (!s) continue;
      region = region ? box_intersection(*region, *s) : *s;
    }
    if (!region)
      throw ValidationError("integrating over a form needs a support box");
    QuadratureOptions q;
    q.rel_tol = opts.outer_rel;
    q.nodes = opts.nodes;
    q.feature_scale = feature_ambient;
    return wedge_integral_over_box(m, *region, all, q);
  }
  throw ValidationError("cylinders integrate through the product-space API");
}

void ensure_residual_clear(const MollifiedForm& R, const SmoothForm& phi) {
  auto s = phi.support_box();
  if (!s) return;
  if (!R.residual_vanishes_on(s->expanded(R.epsilon())))
    throw ValidationError(
        "chart cutoffs do not cover the mollified factor near supp(phi)");
}

}  // namespace

double wedge_eval(const Current& T1, const Current& T2, const SmoothForm& phi,
                  double eps, const DeRhamData& data,
                  const WedgeOptions& opts) {
  check_wedge_preconditions(T1, T2, phi, data);
  check_epsilon(eps, data, std::min(T1.margin(), T2.margin()));
  MollifiedPtr R = regularize_glued(T2, eps, data, opts.smoothing());
  ensure_residual_clear(*R, phi);
  std::vector<const FormLike*> factors{R.get(), &phi};
  double feature = mollifier_reach(eps, data);
  return wedge_with_factors(T1, factors, feature, opts);
}

IntersectionResult intersect(const Current& T1, const Current& T2,
                             const SmoothForm& phi, const DeRhamData& data,
                             const EpsilonSchedule& schedule,
                             const WedgeOptions& opts) {
  check_wedge_preconditions(T1, T2, phi, data);
  std::vector<double> raws;
  for (double eps : schedule.values())
    raws.push_back(wedge_eval(T1, T2, phi, eps, data, opts));
  IntersectionResult res;
  res.value = extrapolate_limit(schedule, raws);
  res.degree = T1.degree() + T2.degree();
  res.support_hint = box_intersection(T1.bounding_box(), T2.bounding_box());
  res.data_id = data.id;
  return res;
}

EpsilonLimit kronecker_index(const Current& T1, const Current& T2,
                             const DeRhamData& data,
                             const EpsilonSchedule& schedule,
                             std::optional<Box> window,
                             const WedgeOptions& opts) {
  const int m = data.dimension;
  if (T1.degree() + T2.degree() != m)
    throw NotTopDegree("Kronecker index needs deg(T1) + deg(T2) = m");
  if (!T1.compact() && !T2.compact())
    throw ValidationError("one factor must be compact");
  auto require_closed = [](const Current& T, const char* which) {
    if (T.is_chain() && !is_closed(T.chain()))
      throw ValidationError(std::string(which) + " must be closed");
  };
  require_closed(T1, "T1");
  require_closed(T2, "T2");

  Box hint = box_intersection(T1.bounding_box(), T2.bounding_box());
  double pad = 2.0 * mollifier_reach(schedule.eps0, data) + 0.25;
  Box inner = window ? *window : hint.expanded(pad);
  SmoothForm one = SmoothForm::zero_form(
      m, make_plateau_field(inner, inner.expanded(0.5)), inner.expanded(0.5));
  IntersectionResult r = intersect(T1, T2, one, data, schedule, opts);
  return r.value;
}

namespace {

EpsilonLimit triple_nested(const Current& A, const Current& B,
                           const Current& C, const SmoothForm& phi,
                           const DeRhamData& data,
                           const EpsilonSchedule& schedule, double sign,
                           const WedgeOptions& opts) {
  // int_A R_{rho^2 eps}(B) ^ R_eps(C) ^ phi along the schedule
  int want = A.dimension() - B.degree() - C.degree();
  if (want < 0) throw DegreeUnderflow("triple intersection test form degree");
  if (phi.degree() != want)
    throw DimensionMismatch("test form degree for the triple product");
  std::vector<double> raws;
  for (double eps : schedule.values()) {
    double eps_inner = eps * schedule.ratio * schedule.ratio;
    check_epsilon(eps, data,
                  std::min({A.margin(), B.margin(), C.margin()}));
    MollifiedPtr RB = regularize_glued(B, eps_inner, data, opts.smoothing());
    MollifiedPtr RC = regularize_glued(C, eps, data, opts.smoothing());
    ensure_residual_clear(*RB, phi);
    ensure_residual_clear(*RC, phi);
    std::vector<const FormLike*> factors{RB.get(), RC.get(), &phi};
    double feature = mollifier_reach(eps_inner, data);
    raws.push_back(sign * wedge_with_factors(A, factors, feature, opts));
  }
  return extrapolate_limit(schedule, raws);
}

}  // namespace

EpsilonLimit triple_intersect(const Current& T1, const Current& T2,
                              const Current& T3, const SmoothForm& phi,
                              const DeRhamData& data,
                              const EpsilonSchedule& schedule,
                              const WedgeOptions& opts) {
  int compact = (T1.compact() ? 1 : 0) + (T2.compact() ? 1 : 0) +
                (T3.compact() ? 1 : 0);
  if (compact < 2)
    throw ValidationError("triple product needs two compact factors");
  return triple_nested(T1, T2, T3, phi, data, schedule, +1.0, opts);
}

EpsilonLimit triple_intersect_right(const Current& T1, const Current& T2,
                                    const Current& T3, const SmoothForm& phi,
                                    const DeRhamData& data,
                                    const EpsilonSchedule& schedule,
                                    const WedgeOptions& opts) {
  int p1 = T1.degree();
  int p23 = T2.degree() + T3.degree();
  double sign = (p1 * p23) % 2 == 0 ? 1.0 : -1.0;
  return triple_nested(T2, T3, T1, phi, data, schedule, sign, opts);
}

double check_closed(const Current& T1, const Current& T2,
                    const SmoothForm& psi, const DeRhamData& data,
                    const EpsilonSchedule& schedule, const WedgeOptions& opts) {
  SmoothForm dpsi = exterior_derivative(psi);
  IntersectionResult r = intersect(T1, T2, dpsi, data, schedule, opts);
  return r.value.extrapolated;
}

double check_graded_commutativity(const Current& T1, const Current& T2,
                                  const SmoothForm& phi, const DeRhamData& data,
                                  const EpsilonSchedule& schedule,
                                  const WedgeOptions& opts) {
  // both orders must accept the same test-form degree
  if (T1.dimension() - T2.degree() != T2.dimension() - T1.degree())
    throw DimensionMismatch("graded commutation needs matching codimensions");
  IntersectionResult ab = intersect(T1, T2, phi, data, schedule, opts);
  IntersectionResult ba = intersect(T2, T1, phi, data, schedule, opts);
  int i = T1.degree(), j = T2.degree();
  double sign = (i * j) % 2 == 0 ? 1.0 : -1.0;
  return std::abs(ab.value.extrapolated - sign * ba.value.extrapolated);
}

}  // namespace currents
