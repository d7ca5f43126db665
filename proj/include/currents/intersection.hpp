#ifndef CURRENTS_INTERSECTION_HPP
#define CURRENTS_INTERSECTION_HPP

#include <optional>
#include <string>

#include "currents/chart.hpp"
#include "currents/current.hpp"
#include "currents/extrapolation.hpp"
#include "currents/smoothing.hpp"

namespace currents {

struct WedgeOptions {
  double outer_rel = 1e-6;   // quadrature over T1
  double inner_rel = 1e-8;   // mollified coefficient quadrature
  int nodes = 16;
  int inner_nodes = 16;

  SmoothingOptions smoothing() const {
    SmoothingOptions s;
    s.rel_tol = inner_rel;
    s.nodes = inner_nodes;
    return s;
  }
};

struct IntersectionResult {
  EpsilonLimit value;  // per test form
  int degree = 0;      // deg(T1) + deg(T2)
  Box support_hint;    // bounding box of supp(T1) ^ supp(T2)
  std::string data_id;
};

// One epsilon step of the intersection pairing: int_{T1} R_eps T2 ^ phi.
// Bilinear in (T2, phi); exact zeros when the supports stay apart.
double wedge_eval(const Current& T1, const Current& T2, const SmoothForm& phi,
                  double eps, const DeRhamData& data,
                  const WedgeOptions& opts = {});

// The intersection limit: wedge_eval along the schedule plus Richardson
// extrapolation. A diverged or oscillating verdict is a result, not an error.
IntersectionResult intersect(const Current& T1, const Current& T2,
                             const SmoothForm& phi, const DeRhamData& data,
                             const EpsilonSchedule& schedule,
                             const WedgeOptions& opts = {});

// Evaluation at a plateau "1" over the window (defaults to a padded support
// hint). Degrees must sum to the ambient dimension and both factors must be
// closed; integer-valued for transversal closed chains.
EpsilonLimit kronecker_index(const Current& T1, const Current& T2,
                             const DeRhamData& data,
                             const EpsilonSchedule& schedule,
                             std::optional<Box> window = std::nullopt,
                             const WedgeOptions& opts = {});

// Iterated limit for [[T1 ^ T2] ^ T3](phi) with the inner mollifier pinned
// at ratio^2 times the outer one.
EpsilonLimit triple_intersect(const Current& T1, const Current& T2,
                              const Current& T3, const SmoothForm& phi,
                              const DeRhamData& data,
                              const EpsilonSchedule& schedule,
                              const WedgeOptions& opts = {});

// Same nesting evaluated through the graded-commutation rearrangement
// [T1 ^ [T2 ^ T3]] = (-1)^{p1(p2+p3)} [[T2 ^ T3] ^ T1].
EpsilonLimit triple_intersect_right(const Current& T1, const Current& T2,
                                    const Current& T3, const SmoothForm& phi,
                                    const DeRhamData& data,
                                    const EpsilonSchedule& schedule,
                                    const WedgeOptions& opts = {});

// Extrapolated value of intersect(T1, T2, d psi); contract: -> 0 for closed
// inputs.
double check_closed(const Current& T1, const Current& T2,
                    const SmoothForm& psi, const DeRhamData& data,
                    const EpsilonSchedule& schedule,
                    const WedgeOptions& opts = {});

// |[T1 ^ T2](phi) - (-1)^{ij} [T2 ^ T1](phi)| after extrapolation.
double check_graded_commutativity(const Current& T1, const Current& T2,
                                  const SmoothForm& phi, const DeRhamData& data,
                                  const EpsilonSchedule& schedule,
                                  const WedgeOptions& opts = {});

}  // namespace currents

#endif
