#ifndef CURRENTS_EXTRAPOLATION_HPP
#define CURRENTS_EXTRAPOLATION_HPP

#include <string>
#include <vector>

namespace currents {

// Strictly decreasing geometric mollifier schedule eps_k = eps0 * ratio^k.
struct EpsilonSchedule {
  double eps0 = 0.2;
  double ratio = 0.5;
  int count = 8;
  double tol = 1e-6;

  std::vector<double> values() const;
  void validate() const;
};

enum class Verdict { Converged, Diverged, Oscillating };

std::string to_string(Verdict v);

// Convergence record for one epsilon-limit extraction.
struct EpsilonLimit {
  EpsilonSchedule schedule;
  std::vector<double> raw_values;  // one per eps_k
  std::vector<double> extrapolants;  // running second-level extrapolants
  double extrapolated = 0.0;
  double error_estimate = 0.0;
  double fitted_rate = 0.0;  // alpha in error ~ c * eps^alpha (0 when unfit)
  Verdict verdict = Verdict::Diverged;
};

// Aitken/Richardson extrapolation (orders 1 then 2) with the leading rate
// fitted from the last three raw values. A diverged or oscillating verdict is
// a first-class result, not an error.
EpsilonLimit extrapolate_limit(const EpsilonSchedule& schedule,
                               const std::vector<double>& raw_values);

}  // namespace currents

#endif
