#include "currents/extrapolation.hpp"

#include <algorithm>
#include <cmath>

#include "currents/errors.hpp"

namespace currents {

std::vector<double> EpsilonSchedule::values() const {
  validate();
  std::vector<double> v(count);
  double e = eps0;
  for (int i = 0; i < count; ++i) {
    v[i] = e;
    e *= ratio;
  }
  return v;
}

void EpsilonSchedule::validate() const {
  if (!(eps0 > 0)) throw ValidationError("schedule eps0 must be positive");
  if (!(ratio > 0 && ratio < 1))
    throw ValidationError("schedule ratio must lie in (0,1)");
  if (count < 2) throw ValidationError("schedule needs at least two steps");
  if (!(tol > 0)) throw ValidationError("schedule tolerance must be positive");
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::Converged:
      return "converged";
    case Verdict::Diverged:
      return "diverged";
    case Verdict::Oscillating:
      return "oscillating";
  }
  return "unknown";
}

namespace {

// One Aitken delta-squared sweep; entries where the step is degenerate keep
// the plain value.
std::vector<double> aitken(const std::vector<double>& f, double noise_floor) {
  if (f.size() < 3) return f;
  std::vector<double> out;
  out.reserve(f.size() - 2);
  for (std::size_t i = 2; i < f.size(); ++i) {
    double d1 = f[i - 1] - f[i - 2];
    double d2 = f[i] - f[i - 1];
    double den = d2 - d1;
    if (std::abs(den) < noise_floor || std::abs(d2) < noise_floor) {
      out.push_back(f[i]);
    } else {
      out.push_back(f[i] - d2 * d2 / den);
    }
  }
  return out;
}

}  // namespace

EpsilonLimit extrapolate_limit(const EpsilonSchedule& schedule,
                               const std::vector<double>& raw_values) {
  schedule.validate();
  EpsilonLimit lim;
  lim.schedule = schedule;
  lim.raw_values = raw_values;
  const int n = static_cast<int>(raw_values.size());
  if (n == 0) throw ValidationError("no raw values to extrapolate");
  for (double v : raw_values)
    if (!std::isfinite(v)) throw NonFiniteValue("raw value not finite");

  double scale = 0.0;
  for (double v : raw_values) scale = std::max(scale, std::abs(v));
  const double noise = std::max(1e-14, 1e-12 * scale);

  // all differences below noise: the sequence is flat
  bool flat = true;
  for (int i = 1; i < n; ++i)
    flat = flat && std::abs(raw_values[i] - raw_values[i - 1]) <= noise;
  if (flat || n < 3) {
    lim.extrapolated = raw_values[n - 1];
    lim.error_estimate =
        n >= 2 ? std::abs(raw_values[n - 1] - raw_values[n - 2]) : 0.0;
    lim.verdict = lim.error_estimate < schedule.tol ? Verdict::Converged
                                                    : Verdict::Diverged;
    lim.extrapolants = {lim.extrapolated};
    return lim;
  }

  // fitted leading rate from the last three raw values
  {
    double d1 = raw_values[n - 2] - raw_values[n - 3];
    double d2 = raw_values[n - 1] - raw_values[n - 2];
    if (std::abs(d1) > noise && std::abs(d2) > noise && d2 / d1 > 0) {
      lim.fitted_rate = std::log(d2 / d1) / std::log(schedule.ratio);
    }
  }

  std::vector<double> level1 = aitken(raw_values, noise);
  std::vector<double> level2 = aitken(level1, noise);
  const std::vector<double>& best =
      !level2.empty() ? level2 : (!level1.empty() ? level1 : raw_values);
  lim.extrapolants = best;
  lim.extrapolated = best.back();
  if (best.size() >= 2) {
    lim.error_estimate = std::abs(best.back() - best[best.size() - 2]);
  } else if (!level1.empty()) {
    lim.error_estimate = std::abs(level1.back() - lim.extrapolated) + noise;
  } else {
    lim.error_estimate = std::abs(raw_values[n - 1] - raw_values[n - 2]);
  }

  // oscillation: the sign of the raw differences alternates twice in a row
  int alternations = 0;
  for (int i = 2; i < n; ++i) {
    double d1 = raw_values[i - 1] - raw_values[i - 2];
    double d2 = raw_values[i] - raw_values[i - 1];
    if (std::abs(d1) > noise && std::abs(d2) > noise && d1 * d2 < 0)
      ++alternations;
    else
      alternations = 0;
    if (alternations >= 2) break;
  }

  if (lim.error_estimate < schedule.tol) {
    lim.verdict = Verdict::Converged;
  } else if (alternations >= 2) {
    lim.verdict = Verdict::Oscillating;
  } else {
    lim.verdict = Verdict::Diverged;
  }
  return lim;
}

}  // namespace currents
