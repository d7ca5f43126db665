#include "currents/chart.hpp"

#include <cmath>
#include <random>

#include "currents/errors.hpp"

namespace currents {

namespace {

std::vector<double> invert(const std::vector<double>& A, int m) {
  std::vector<double> a = A, inv(m * m, 0.0);
  for (int i = 0; i < m; ++i) inv[i * m + i] = 1.0;
  for (int col = 0; col < m; ++col) {
    int piv = col;
    for (int r = col + 1; r < m; ++r)
      if (std::abs(a[r * m + col]) > std::abs(a[piv * m + col])) piv = r;
    if (a[piv * m + col] == 0.0)
      throw ValidationError("chart matrix is singular");
    if (piv != col)
      for (int c = 0; c < m; ++c) {
        std::swap(a[piv * m + c], a[col * m + c]);
        std::swap(inv[piv * m + c], inv[col * m + c]);
      }
    double d = a[col * m + col];
    for (int c = 0; c < m; ++c) {
      a[col * m + c] /= d;
      inv[col * m + c] /= d;
    }
    for (int r = 0; r < m; ++r) {
      if (r == col) continue;
      double f = a[r * m + col];
      if (f == 0.0) continue;
      for (int c = 0; c < m; ++c) {
        a[r * m + c] -= f * a[col * m + c];
        inv[r * m + c] -= f * inv[col * m + c];
      }
    }
  }
  return inv;
}

double matrix_norm_bound(const std::vector<double>& A, int) {
  // Frobenius norm bounds the operator norm.
  double s = 0;
  for (double v : A) s += v * v;
  return std::sqrt(s);
}

bool is_identity_matrix(const std::vector<double>& A, int m) {
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      if (A[i * m + j] != (i == j ? 1.0 : 0.0)) return false;
  return true;
}

}  // namespace

Chart Chart::affine(int m, const std::vector<double>& A, const Vec& offset,
                    const Box& inner, const Box& outer) {
  if (static_cast<int>(A.size()) != m * m)
    throw DimensionMismatch("affine chart matrix size");
  Chart c;
  c.kind_ = Kind::Affine;
  c.m_ = m;
  c.A_ = A;
  c.Ainv_ = invert(A, m);
  if (det_small(A.data(), m) <= 0)
    throw ValidationError("chart must preserve orientation");
  c.offset_ = offset;
  bool no_offset = true;
  for (int i = 0; i < m; ++i) no_offset = no_offset && offset[i] == 0.0;
  c.identity_ = is_identity_matrix(A, m) && no_offset;
  c.distortion_ = c.identity_ ? 1.0 : matrix_norm_bound(c.Ainv_, m);
  c.cutoff_ = make_plateau_field(inner, outer);
  c.inner_ = inner;
  c.outer_ = outer;
  return c;
}

Chart Chart::identity(int m, const Box& inner, const Box& outer) {
  std::vector<double> A(m * m, 0.0);
  for (int i = 0; i < m; ++i) A[i * m + i] = 1.0;
  return affine(m, A, Vec(m), inner, outer);
}

Chart Chart::smooth(int m, std::function<Vec(const Vec&)> fwd,
                    std::function<Vec(const Vec&)> inv,
                    std::function<void(const Vec&, double*)> jac,
                    double distortion_bound, const Box& inner,
                    const Box& outer) {
  Chart c;
  c.kind_ = Kind::Smooth;
  c.m_ = m;
  c.fwd_ = std::move(fwd);
  c.inv_ = std::move(inv);
  c.jac_ = std::move(jac);
  c.distortion_ = distortion_bound;
  c.cutoff_ = make_plateau_field(inner, outer);
  c.inner_ = inner;
  c.outer_ = outer;
  return c;
}

Vec Chart::apply(const Vec& x) const {
  if (kind_ == Kind::Smooth) return fwd_(x);
  if (identity_) return x;
  Vec y(m_);
  for (int i = 0; i < m_; ++i) {
    double s = offset_[i];
    for (int j = 0; j < m_; ++j) s += A_[i * m_ + j] * x[j];
    y[i] = s;
  }
  return y;
}

Vec Chart::apply_inverse(const Vec& y) const {
  if (kind_ == Kind::Smooth) return inv_(y);
  if (identity_) return y;
  Vec x(m_);
  for (int i = 0; i < m_; ++i) {
    double s = 0;
    for (int j = 0; j < m_; ++j) s += Ainv_[i * m_ + j] * (y[j] - offset_[j]);
    x[i] = s;
  }
  return x;
}

void Chart::jacobian(const Vec& x, double* J) const {
  if (kind_ == Kind::Smooth) {
    jac_(x, J);
    return;
  }
  std::copy(A_.begin(), A_.end(), J);
}

void Chart::validate() const {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  for (int s = 0; s < 64; ++s) {
    Vec x(m_);
    for (int i = 0; i < m_; ++i)
      x[i] = 0.5 * (outer_.lo[i] + outer_.hi[i]) +
             0.5 * u(rng) * outer_.width(i);
    Vec back = apply_inverse(apply(x));
    for (int i = 0; i < m_; ++i)
      if (std::abs(back[i] - x[i]) > 1e-9 * std::max(1.0, std::abs(x[i])))
        throw ValidationError("chart forward/inverse mismatch at a sample");
    double g = cutoff_->value(x);
    if (g < 0.0 || g > 1.0 + 1e-12)
      throw ValidationError("chart cutoff out of [0,1]");
  }
}

void DeRhamData::validate() const {
  if (charts.empty()) throw ChartCountZero("de Rham data has no charts");
  if (bumps.size() != charts.size())
    throw ValidationError("need exactly one bump per chart");
  for (const auto& c : charts) {
    if (c.dimension() != dimension)
      throw DimensionMismatch("chart dimension mismatch");
    c.validate();
  }
  for (const auto& b : bumps) {
    if (b.dimension != dimension)
      throw DimensionMismatch("bump dimension mismatch");
  }
}

DeRhamData make_single_chart_data(int m, const BumpProfile& bump,
                                  const Box& region, const std::string& id) {
  DeRhamData d;
  d.dimension = m;
  d.id = id;
  d.charts.push_back(Chart::identity(m, region, region.expanded(1.0)));
  d.charts.back().id = 0;
  d.bumps.push_back(bump);
  return d;
}

}  // namespace currents
