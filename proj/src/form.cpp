#include "currents/form.hpp"

#include <algorithm>
#include <cmath>

#include "currents/errors.hpp"
#include "currents/quadrature.hpp"

namespace currents {

int FormLike::coefficient_count() const {
  return static_cast<int>(combinations(dimension(), degree()).size());
}

double FormLike::coefficient(IndexMask mask, const Vec& x) const {
  std::vector<double> buf(coefficient_count());
  coefficients(x, buf.data());
  int pos = combination_position(dimension(), degree(), mask);
  if (pos < 0) throw DimensionMismatch("coefficient mask has wrong cardinality");
  return buf[pos];
}

SmoothForm::SmoothForm(int m, int p, std::vector<FieldPtr> coeffs,
                       std::optional<Box> support)
    : m_(m), p_(p), coeffs_(std::move(coeffs)), support_(std::move(support)) {
  // p = m+1 is allowed as the (identically zero) image of d on top forms
  if (p < 0 || p > m + 1) throw DimensionMismatch("form degree out of range");
  std::size_t need = combinations(m, p).size();
  if (coeffs_.size() != need)
    throw DimensionMismatch("coefficient count does not match degree");
}

SmoothForm SmoothForm::zero(int m, int p) {
  std::vector<FieldPtr> cs(combinations(m, p).size(), make_constant_field(0.0));
  return SmoothForm(m, p, std::move(cs));
}

SmoothForm SmoothForm::zero_form(int m, FieldPtr f, std::optional<Box> support) {
  std::vector<FieldPtr> cs{std::move(f)};
  if (!support && cs[0]->support()) support = cs[0]->support();
  return SmoothForm(m, 0, std::move(cs), std::move(support));
}

void SmoothForm::coefficients(const Vec& x, double* out) const {
  if (support_ && !support_->contains(x)) {
    std::fill(out, out + coeffs_.size(), 0.0);
    return;
  }
  for (std::size_t i = 0; i < coeffs_.size(); ++i) out[i] = coeffs_[i]->value(x);
}

const FieldPtr& SmoothForm::coeff_field(IndexMask mask) const {
  int pos = combination_position(m_, p_, mask);
  if (pos < 0) throw DimensionMismatch("coefficient mask has wrong cardinality");
  return coeffs_[pos];
}

double SmoothForm::coeff_tuple(const std::vector<int>& tuple, const Vec& x) const {
  IndexMask mask = 0;
  int sign = tuple_sign(tuple, &mask);
  if (sign == 0) return 0.0;
  if (support_ && !support_->contains(x)) return 0.0;
  return sign * coeff_field(mask)->value(x);
}

SmoothForm SmoothForm::scaled(double s) const {
  std::vector<FieldPtr> cs;
  cs.reserve(coeffs_.size());
  for (const auto& c : coeffs_) cs.push_back(make_scaled_field(c, s));
  return SmoothForm(m_, p_, std::move(cs), support_);
}

SmoothForm operator+(const SmoothForm& a, const SmoothForm& b) {
  if (a.m_ != b.m_ || a.p_ != b.p_)
    throw DimensionMismatch("cannot add forms of different type");
  std::vector<FieldPtr> cs;
  cs.reserve(a.coeffs_.size());
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
    cs.push_back(make_sum_field(a.coeffs_[i], b.coeffs_[i]));
  std::optional<Box> sup;
  if (a.support_ && b.support_) sup = a.support_->hull(*b.support_);
  return SmoothForm(a.m_, a.p_, std::move(cs), sup);
}

SmoothForm exterior_derivative(const SmoothForm& phi) {
  int m = phi.dimension(), p = phi.degree();
  const auto& out_combos = combinations(m, p + 1);
  std::vector<FieldPtr> cs;
  cs.reserve(out_combos.size());
  for (IndexMask K : out_combos) {
    FieldPtr acc = make_constant_field(0.0);
    for (int i = 0; i < m; ++i) {
      IndexMask bit = IndexMask{1} << i;
      if (!(K & bit)) continue;
      IndexMask rest = K & ~bit;
      int sign = merge_sign(bit, rest);
      FieldPtr term = phi.coeff_field(rest)->partial_field(i);
      acc = make_sum_field(acc, make_scaled_field(term, sign));
    }
    cs.push_back(std::move(acc));
  }
  return SmoothForm(m, p + 1, std::move(cs), phi.support_box());
}

SmoothForm wedge(const SmoothForm& a, const SmoothForm& b) {
  int m = a.dimension();
  if (b.dimension() != m) throw DimensionMismatch("wedge dimension mismatch");
  int p = a.degree(), q = b.degree();
  if (p + q > m) return SmoothForm::zero(m, m);
  const auto& out_combos = combinations(m, p + q);
  std::vector<FieldPtr> cs;
  cs.reserve(out_combos.size());
  for (IndexMask K : out_combos) {
    FieldPtr acc = make_constant_field(0.0);
    for (IndexMask I : combinations(m, p)) {
      if ((I & K) != I) continue;
      IndexMask rest = K & ~I;
      int sign = merge_sign(I, rest);
      acc = make_sum_field(
          acc, make_scaled_field(
                   make_product_field(a.coeff_field(I), b.coeff_field(rest)),
                   sign));
    }
    cs.push_back(std::move(acc));
  }
  std::optional<Box> sup = a.support_box();
  auto sb = b.support_box();
  if (sb && (!sup || true)) {
    if (!sup) sup = sb;
    else {
      Box box = *sup;
      for (int i = 0; i < m; ++i) {
        box.lo[i] = std::max(box.lo[i], sb->lo[i]);
        box.hi[i] = std::min(box.hi[i], sb->hi[i]);
        if (box.lo[i] > box.hi[i]) box.hi[i] = box.lo[i];
      }
      sup = box;
    }
  }
  return SmoothForm(m, p + q, std::move(cs), sup);
}

// --------------------------------------------------------------- combinators

namespace {

class FieldScaledForm : public FormLike {
 public:
  FieldScaledForm(FormPtr base, FieldPtr factor)
      : base_(std::move(base)), factor_(std::move(factor)) {}
  int dimension() const override { return base_->dimension(); }
  int degree() const override { return base_->degree(); }
  void coefficients(const Vec& x, double* out) const override {
    double f = factor_->value(x);
    if (f == 0.0) {
      std::fill(out, out + base_->coefficient_count(), 0.0);
      return;
    }
    base_->coefficients(x, out);
    for (int i = 0; i < base_->coefficient_count(); ++i) out[i] *= f;
  }
  std::optional<Box> support_box() const override {
    auto sb = base_->support_box();
    auto sf = factor_->support();
    if (sb && sf) {
      Box box = *sb;
      for (int i = 0; i < box.dim(); ++i) {
        box.lo[i] = std::max(box.lo[i], sf->lo[i]);
        box.hi[i] = std::min(box.hi[i], sf->hi[i]);
        if (box.lo[i] > box.hi[i]) box.hi[i] = box.lo[i];
      }
      return box;
    }
    if (sb) return sb;
    return sf;
  }

 private:
  FormPtr base_;
  FieldPtr factor_;
};

class SumForm : public FormLike {
 public:
  explicit SumForm(std::vector<FormPtr> parts) : parts_(std::move(parts)) {
    if (parts_.empty()) throw DimensionMismatch("empty form sum");
    for (const auto& p : parts_)
      if (p->dimension() != parts_[0]->dimension() ||
          p->degree() != parts_[0]->degree())
        throw DimensionMismatch("form sum type mismatch");
  }
  int dimension() const override { return parts_[0]->dimension(); }
  int degree() const override { return parts_[0]->degree(); }
  void coefficients(const Vec& x, double* out) const override {
    int n = parts_[0]->coefficient_count();
    std::fill(out, out + n, 0.0);
    std::vector<double> buf(n);
    for (const auto& p : parts_) {
      auto s = p->support_box();
      if (s && !s->contains(x)) continue;
      p->coefficients(x, buf.data());
      for (int i = 0; i < n; ++i) out[i] += buf[i];
    }
  }
  std::optional<Box> support_box() const override {
    std::optional<Box> acc;
    for (const auto& p : parts_) {
      auto s = p->support_box();
      if (!s) return std::nullopt;
      acc = acc ? acc->hull(*s) : *s;
    }
    return acc;
  }

 private:
  std::vector<FormPtr> parts_;
};

}  // namespace

FormPtr make_field_scaled_form(FormPtr base, FieldPtr factor) {
  return std::make_shared<FieldScaledForm>(std::move(base), std::move(factor));
}

FormPtr make_sum_form(std::vector<FormPtr> parts) {
  return std::make_shared<SumForm>(std::move(parts));
}

// ------------------------------------------------------------ cell pullback

namespace {

constexpr int kMaxFactors = 6;
constexpr int kMaxCoeffs = 70;  // C(8,4)

struct CoeffBufs {
  double v[kMaxFactors][kMaxCoeffs];
};

// Recursive wedge coefficient for mask K split among the remaining factors.
double wedge_coeff(IndexMask K, const std::vector<const FormLike*>& factors,
                   const CoeffBufs& bufs, std::size_t fi, int m) {
  if (fi == factors.size()) return K == 0 ? 1.0 : 0.0;
  const FormLike* f = factors[fi];
  int p = f->degree();
  if (p == 0) {
    double v = bufs.v[fi][0];
    if (v == 0.0) return 0.0;
    return v * wedge_coeff(K, factors, bufs, fi + 1, m);
  }
  double acc = 0.0;
  const auto& combos = combinations(m, p);
  for (std::size_t pos = 0; pos < combos.size(); ++pos) {
    IndexMask I = combos[pos];
    if ((I & K) != I) continue;
    double c = bufs.v[fi][pos];
    if (c == 0.0) continue;
    IndexMask rest = K & ~I;
    double tail = wedge_coeff(rest, factors, bufs, fi + 1, m);
    if (tail == 0.0) continue;
    acc += merge_sign(I, rest) * c * tail;
  }
  return acc;
}

void fill_bufs(const Vec& x, const std::vector<const FormLike*>& factors,
               CoeffBufs& bufs) {
  if (factors.size() > kMaxFactors)
    throw DimensionMismatch("too many wedge factors");
  for (std::size_t i = 0; i < factors.size(); ++i) {
    if (factors[i]->coefficient_count() > kMaxCoeffs)
      throw DimensionMismatch("too many form coefficients");
    factors[i]->coefficients(x, bufs.v[i]);
  }
}

}  // namespace

double pullback_wedge_value(const Cell& cell, const Vec& u,
                            const std::vector<const FormLike*>& factors) {
  const int m = cell.m, k = cell.k;
  int total = 0;
  for (const auto* f : factors) total += f->degree();
  if (total != k) throw DimensionMismatch("wedge degree does not match cell");

  Vec x = cell.eval(u);
  CoeffBufs bufs;
  fill_bufs(x, factors, bufs);
  if (k == 0) return wedge_coeff(0, factors, bufs, 0, m);

  double J[kMaxDim * kMaxDim];
  cell.jacobian(u, J);
  double acc = 0.0;
  for (IndexMask K : combinations(m, k)) {
    double w = wedge_coeff(K, factors, bufs, 0, m);
    if (w == 0.0) continue;
    // minor of rows K
    double Mk[kMaxDim * kMaxDim];
    int r = 0;
    for (int i = 0; i < m; ++i) {
      if (!(K & (IndexMask{1} << i))) continue;
      for (int j = 0; j < k; ++j) Mk[r * k + j] = J[i * k + j];
      ++r;
    }
    acc += w * det_small(Mk, k);
  }
  return acc;
}

double wedge_integral_over_box(int m, const Box& region,
                               const std::vector<const FormLike*>& factors,
                               const QuadratureOptions& opts) {
  int total = 0;
  for (const auto* f : factors) total += f->degree();
  if (total != m)
    throw DimensionMismatch("wedge integral needs total degree = dimension");

  SupportTest support = [&factors](const Box& b) {
    for (const auto* f : factors)
      if (!f->possibly_nonzero(b)) return false;
    return true;
  };

  IndexMask full = (IndexMask{1} << m) - 1;
  Integrand f = [&](const Vec& x, double* out) {
    CoeffBufs bufs;
    fill_bufs(x, factors, bufs);
    out[0] = wedge_coeff(full, factors, bufs, 0, m);
  };
  double out = 0;
  integrate_box(region, 1, f, opts, support, &out);
  return out;
}

}  // namespace currents
