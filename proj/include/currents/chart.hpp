#ifndef CURRENTS_CHART_HPP
#define CURRENTS_CHART_HPP

#include <functional>
#include <string>
#include <vector>

#include "currents/bump.hpp"
#include "currents/fields.hpp"
#include "currents/geometry.hpp"

namespace currents {

// One chart of the auxiliary smoothing data: an ordered coordinate system
// plus a cutoff that localizes the chart's smoothing step.
class Chart {
 public:
  enum class Kind { Affine, Smooth };

  // Affine chart y = A x + b; A must be orientation preserving.
  static Chart affine(int m, const std::vector<double>& A, const Vec& offset,
                      const Box& inner, const Box& outer);
  static Chart identity(int m, const Box& inner, const Box& outer);
  // General differentiable chart with caller-supplied inverse and Jacobian
  // (row-major m x m).
  static Chart smooth(int m, std::function<Vec(const Vec&)> fwd,
                      std::function<Vec(const Vec&)> inv,
                      std::function<void(const Vec&, double*)> jac,
                      double distortion_bound, const Box& inner,
                      const Box& outer);

  int id = 0;
  Kind kind() const { return kind_; }
  int dimension() const { return m_; }
  bool is_affine() const { return kind_ == Kind::Affine; }
  bool is_identity() const { return identity_; }

  Vec apply(const Vec& x) const;
  Vec apply_inverse(const Vec& y) const;
  void jacobian(const Vec& x, double* J) const;  // row-major m x m
  const std::vector<double>& matrix() const { return A_; }
  const std::vector<double>& matrix_inverse() const { return Ainv_; }

  // Operator-norm style bound on A^-1: scales how far a chart-space ball of
  // radius eps*r can reach in base coordinates.
  double distortion() const { return distortion_; }

  const FieldPtr& cutoff() const { return cutoff_; }
  const Box& inner_box() const { return inner_; }
  const Box& outer_box() const { return outer_; }

  // Checks forward/inverse consistency on sampled points and the cutoff
  // range contract.
  void validate() const;

 private:
  Kind kind_ = Kind::Affine;
  int m_ = 0;
  bool identity_ = false;
  std::vector<double> A_, Ainv_;
  Vec offset_;
  std::function<Vec(const Vec&)> fwd_, inv_;
  std::function<void(const Vec&, double*)> jac_;
  double distortion_ = 1.0;
  FieldPtr cutoff_;
  Box inner_, outer_;
};

// Ordered charts with one bump profile per chart. The order is part of the
// data's identity.
struct DeRhamData {
  int dimension = 0;
  std::string id;
  std::vector<Chart> charts;
  std::vector<BumpProfile> bumps;

  void validate() const;
  const Chart& chart(int i) const { return charts[i]; }
  const BumpProfile& bump(int i) const { return bumps[i]; }
  int chart_count() const { return static_cast<int>(charts.size()); }
};

// Single identity chart whose cutoff is 1 on `region`; the standard global
// translation-invariant data.
DeRhamData make_single_chart_data(int m, const BumpProfile& bump,
                                  const Box& region, const std::string& id);

}  // namespace currents

#endif
