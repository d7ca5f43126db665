#include "currents/fields.hpp"

#include <cmath>

namespace currents {

namespace {
constexpr double kFdStep = 1e-5;
}

double ScalarField::partial(const Vec& x, int i) const {
  Vec xp = x, xm = x;
  double h = kFdStep * std::max(1.0, std::abs(x[i]));
  xp[i] += h;
  xm[i] -= h;
  return (value(xp) - value(xm)) / (2 * h);
}

Interval ScalarField::range(const Box&) const {
  constexpr double inf = std::numeric_limits<double>::infinity();
  return {-inf, inf};
}

namespace {

class FdPartialField : public ScalarField {
 public:
  FdPartialField(FieldPtr base, int axis) : base_(std::move(base)), axis_(axis) {}
  double value(const Vec& x) const override { return base_->partial(x, axis_); }
  std::optional<Box> support() const override { return base_->support(); }

 private:
  FieldPtr base_;
  int axis_;
};

}  // namespace

FieldPtr ScalarField::partial_field(int i) const {
  return std::make_shared<FdPartialField>(shared_from_this(), i);
}

// ------------------------------------------------------------ basic fields

namespace {

class ConstantField : public ScalarField {
 public:
  explicit ConstantField(double c) : c_(c) {}
  double value(const Vec&) const override { return c_; }
  double partial(const Vec&, int) const override { return 0.0; }
  FieldPtr partial_field(int) const override { return make_constant_field(0.0); }
  Interval range(const Box&) const override { return {c_, c_}; }

 private:
  double c_;
};

class PolynomialField : public ScalarField {
 public:
  explicit PolynomialField(Polynomial p) : p_(std::move(p)) {}
  double value(const Vec& x) const override { return p_.eval(x); }
  double partial(const Vec& x, int i) const override {
    return p_.partial(i).eval(x);
  }
  FieldPtr partial_field(int i) const override {
    return std::make_shared<PolynomialField>(p_.partial(i));
  }
  Interval range(const Box& b) const override { return p_.eval_interval(b); }

 private:
  Polynomial p_;
};

class GenericField : public ScalarField {
 public:
  GenericField(std::function<double(const Vec&)> fn, std::optional<Box> sup)
      : fn_(std::move(fn)), sup_(std::move(sup)) {}
  double value(const Vec& x) const override { return fn_(x); }
  std::optional<Box> support() const override { return sup_; }

 private:
  std::function<double(const Vec&)> fn_;
  std::optional<Box> sup_;
};

class SumField : public ScalarField {
 public:
  SumField(FieldPtr a, FieldPtr b) : a_(std::move(a)), b_(std::move(b)) {}
  double value(const Vec& x) const override {
    return a_->value(x) + b_->value(x);
  }
  double partial(const Vec& x, int i) const override {
    return a_->partial(x, i) + b_->partial(x, i);
  }
  FieldPtr partial_field(int i) const override {
    return make_sum_field(a_->partial_field(i), b_->partial_field(i));
  }
  std::optional<Box> support() const override {
    auto sa = a_->support();
    auto sb = b_->support();
    if (sa && sb) return sa->hull(*sb);
    return std::nullopt;
  }
  Interval range(const Box& b) const override {
    Interval ra = a_->range(b), rb = b_->range(b);
    return {ra.lo + rb.lo, ra.hi + rb.hi};
  }

 private:
  FieldPtr a_, b_;
};

class ScaledField : public ScalarField {
 public:
  ScaledField(FieldPtr a, double s) : a_(std::move(a)), s_(s) {}
  double value(const Vec& x) const override { return s_ * a_->value(x); }
  double partial(const Vec& x, int i) const override {
    return s_ * a_->partial(x, i);
  }
  FieldPtr partial_field(int i) const override {
    return make_scaled_field(a_->partial_field(i), s_);
  }
  std::optional<Box> support() const override { return a_->support(); }
  Interval range(const Box& b) const override {
    Interval r = a_->range(b);
    double x = s_ * r.lo, y = s_ * r.hi;
    return {std::min(x, y), std::max(x, y)};
  }

 private:
  FieldPtr a_;
  double s_;
};

class ProductField : public ScalarField {
 public:
  ProductField(FieldPtr a, FieldPtr b) : a_(std::move(a)), b_(std::move(b)) {}
  double value(const Vec& x) const override {
    double va = a_->value(x);
    if (va == 0.0) return 0.0;
    return va * b_->value(x);
  }
  double partial(const Vec& x, int i) const override {
    return a_->partial(x, i) * b_->value(x) + a_->value(x) * b_->partial(x, i);
  }
  FieldPtr partial_field(int i) const override {
    return make_sum_field(make_product_field(a_->partial_field(i), b_),
                          make_product_field(a_, b_->partial_field(i)));
  }
  std::optional<Box> support() const override {
    auto sa = a_->support();
    auto sb = b_->support();
    if (sa && sb) {
      Box box = *sa;
      for (int i = 0; i < box.dim(); ++i) {
        box.lo[i] = std::max(box.lo[i], sb->lo[i]);
        box.hi[i] = std::min(box.hi[i], sb->hi[i]);
        if (box.lo[i] > box.hi[i]) box.hi[i] = box.lo[i];
      }
      return box;
    }
    if (sa) return sa;
    return sb;
  }
  Interval range(const Box& b) const override {
    Interval ra = a_->range(b), rb = b_->range(b);
    double c[4] = {ra.lo * rb.lo, ra.lo * rb.hi, ra.hi * rb.lo, ra.hi * rb.hi};
    double lo = c[0], hi = c[0];
    for (double v : c) {
      lo = std::min(lo, v);
      hi = std::max(hi, v);
    }
    if (std::isnan(lo) || std::isnan(hi)) {
      constexpr double inf = std::numeric_limits<double>::infinity();
      return {-inf, inf};
    }
    return {lo, hi};
  }

 private:
  FieldPtr a_, b_;
};

}  // namespace

FieldPtr make_constant_field(double c) {
  return std::make_shared<ConstantField>(c);
}
FieldPtr make_polynomial_field(Polynomial p) {
  return std::make_shared<PolynomialField>(std::move(p));
}
FieldPtr make_generic_field(std::function<double(const Vec&)> fn,
                            std::optional<Box> support) {
  return std::make_shared<GenericField>(std::move(fn), std::move(support));
}
FieldPtr make_sum_field(FieldPtr a, FieldPtr b) {
  return std::make_shared<SumField>(std::move(a), std::move(b));
}
FieldPtr make_scaled_field(FieldPtr a, double s) {
  return std::make_shared<ScaledField>(std::move(a), s);
}
FieldPtr make_product_field(FieldPtr a, FieldPtr b) {
  return std::make_shared<ProductField>(std::move(a), std::move(b));
}

// ---------------------------------------------------------------- smoothstep

double smoothstep(double t) {
  if (t <= 0.0) return 0.0;
  if (t >= 1.0) return 1.0;
  double u = std::exp(-1.0 / t);
  double v = std::exp(-1.0 / (1.0 - t));
  return u / (u + v);
}

double smoothstep_deriv(double t) {
  if (t <= 0.0 || t >= 1.0) return 0.0;
  double u = std::exp(-1.0 / t);
  double v = std::exp(-1.0 / (1.0 - t));
  double s = u + v;
  return u * v * (1.0 / (t * t) + 1.0 / ((1.0 - t) * (1.0 - t))) / (s * s);
}

namespace {

// Per-axis ramp: 0 outside [o_lo,o_hi], 1 inside [i_lo,i_hi].
struct Ramp {
  double o_lo, i_lo, i_hi, o_hi;

  double value(double x) const {
    if (x <= o_lo || x >= o_hi) return 0.0;
    if (x < i_lo) return smoothstep((x - o_lo) / (i_lo - o_lo));
    if (x > i_hi) return smoothstep((o_hi - x) / (o_hi - i_hi));
    return 1.0;
  }
  double deriv(double x) const {
    if (x <= o_lo || x >= o_hi) return 0.0;
    if (x < i_lo) return smoothstep_deriv((x - o_lo) / (i_lo - o_lo)) / (i_lo - o_lo);
    if (x > i_hi) return -smoothstep_deriv((o_hi - x) / (o_hi - i_hi)) / (o_hi - i_hi);
    return 0.0;
  }
  Interval range(Interval t) const {
    if (t.hi <= o_lo || t.lo >= o_hi) return {0.0, 0.0};
    if (t.lo >= i_lo && t.hi <= i_hi) return {1.0, 1.0};
    // monotone pieces; endpoint values bound the range together with the
    // plateau value when the interval reaches it
    double v0 = value(t.lo), v1 = value(t.hi);
    double lo = std::min(v0, v1), hi = std::max(v0, v1);
    if (t.lo <= i_hi && t.hi >= i_lo) hi = 1.0;
    if (t.lo < i_lo && t.hi > i_hi) lo = std::min(v0, v1);
    if (t.lo <= o_lo || t.hi >= o_hi) lo = 0.0;
    return {lo, hi};
  }
};

class PlateauField : public ScalarField {
 public:
  PlateauField(const Box& inner, const Box& outer) : outer_(outer) {
    if (inner.dim() != outer.dim())
      throw DimensionMismatch("plateau inner/outer dimension mismatch");
    for (int i = 0; i < inner.dim(); ++i) {
      if (!(outer.lo[i] < inner.lo[i] && inner.hi[i] < outer.hi[i]))
        throw ValidationError("plateau inner box must be strictly inside outer");
      ramps_.push_back({outer.lo[i], inner.lo[i], inner.hi[i], outer.hi[i]});
    }
  }

  double value(const Vec& x) const override {
    double v = 1.0;
    for (int i = 0; i < x.size() && i < static_cast<int>(ramps_.size()); ++i) {
      v *= ramps_[i].value(x[i]);
      if (v == 0.0) return 0.0;
    }
    return v;
  }
  double partial(const Vec& x, int i) const override {
    double v = ramps_[i].deriv(x[i]);
    if (v == 0.0) return 0.0;
    for (int j = 0; j < static_cast<int>(ramps_.size()); ++j) {
      if (j == i) continue;
      v *= ramps_[j].value(x[j]);
      if (v == 0.0) return 0.0;
    }
    return v;
  }
  std::optional<Box> support() const override { return outer_; }
  Interval range(const Box& b) const override {
    Interval acc{1.0, 1.0};
    for (int i = 0; i < b.dim(); ++i) {
      Interval r = ramps_[i].range(b.axis(i));
      acc = {acc.lo * r.lo, acc.hi * r.hi};  // ramps are in [0,1]
    }
    return acc;
  }

 private:
  std::vector<Ramp> ramps_;
  Box outer_;
};

class RadialBumpField : public ScalarField {
 public:
  RadialBumpField(const Vec& center, double radius)
      : c_(center), r_(radius) {}

  double value(const Vec& x) const override {
    double rho2 = 0;
    for (int i = 0; i < c_.size(); ++i) {
      double d = (x[i] - c_[i]) / r_;
      rho2 += d * d;
    }
    if (rho2 >= 1.0) return 0.0;
    return std::exp(1.0 + 1.0 / (rho2 - 1.0));
  }
  double partial(const Vec& x, int i) const override {
    double rho2 = 0;
    for (int j = 0; j < c_.size(); ++j) {
      double d = (x[j] - c_[j]) / r_;
      rho2 += d * d;
    }
    if (rho2 >= 1.0) return 0.0;
    double den = rho2 - 1.0;
    return value(x) * (-1.0 / (den * den)) * 2.0 * (x[i] - c_[i]) / (r_ * r_);
  }
  std::optional<Box> support() const override {
    Box b;
    b.lo = Vec(c_.size());
    b.hi = Vec(c_.size());
    for (int i = 0; i < c_.size(); ++i) {
      b.lo[i] = c_[i] - r_;
      b.hi[i] = c_[i] + r_;
    }
    return b;
  }

 private:
  Vec c_;
  double r_;
};

}  // namespace

FieldPtr make_plateau_field(const Box& inner, const Box& outer) {
  return std::make_shared<PlateauField>(inner, outer);
}

FieldPtr make_bump_field(const Vec& center, double radius) {
  return std::make_shared<RadialBumpField>(center, radius);
}

}  // namespace currents
