#include "currents/polynomial.hpp"

#include <algorithm>
#include <cmath>

namespace currents {

namespace {

bool exp_less(const Polynomial::Term& a, const Polynomial::Term& b) {
  return a.exp < b.exp;
}

Interval pow_interval(Interval x, int e) {
  if (e == 0) return {1.0, 1.0};
  double pl = std::pow(x.lo, e);
  double ph = std::pow(x.hi, e);
  if (e % 2 == 1) return {pl, ph};
  // even power: minimum at 0 when the interval straddles it
  double lo = (x.lo <= 0 && x.hi >= 0) ? 0.0 : std::min(pl, ph);
  return {lo, std::max(pl, ph)};
}

Interval mul_interval(Interval a, Interval b) {
  double c[4] = {a.lo * b.lo, a.lo * b.hi, a.hi * b.lo, a.hi * b.hi};
  return {*std::min_element(c, c + 4), *std::max_element(c, c + 4)};
}

}  // namespace

Polynomial Polynomial::constant(int nvars, double c) {
  Polynomial p(nvars);
  if (c != 0.0) {
    Term t;
    t.coeff = c;
    p.terms_.push_back(t);
  }
  return p;
}

Polynomial Polynomial::variable(int nvars, int i) {
  Polynomial p(nvars);
  Term t;
  t.coeff = 1.0;
  t.exp[i] = 1;
  p.terms_.push_back(t);
  return p;
}

int Polynomial::total_degree() const {
  int d = 0;
  for (const auto& t : terms_) {
    int s = 0;
    for (int i = 0; i < nvars_; ++i) s += t.exp[i];
    d = std::max(d, s);
  }
  return d;
}

void Polynomial::add_term(double coeff, const std::vector<int>& exps) {
  Term t;
  t.coeff = coeff;
  for (std::size_t i = 0; i < exps.size(); ++i)
    t.exp[i] = static_cast<std::uint8_t>(exps[i]);
  terms_.push_back(t);
  normalize();
}

double Polynomial::eval(const Vec& u) const {
  double s = 0;
  for (const auto& t : terms_) {
    double v = t.coeff;
    for (int i = 0; i < nvars_; ++i) {
      for (int e = 0; e < t.exp[i]; ++e) v *= u[i];
    }
    s += v;
  }
  return s;
}

Interval Polynomial::eval_interval(const Box& domain) const {
  Interval acc{0, 0};
  for (const auto& t : terms_) {
    Interval v{t.coeff, t.coeff};
    for (int i = 0; i < nvars_; ++i) {
      if (t.exp[i] > 0) v = mul_interval(v, pow_interval(domain.axis(i), t.exp[i]));
    }
    acc.lo += v.lo;
    acc.hi += v.hi;
  }
  return acc;
}

Polynomial Polynomial::partial(int i) const {
  Polynomial p(nvars_);
  for (const auto& t : terms_) {
    if (t.exp[i] == 0) continue;
    Term d = t;
    d.coeff = t.coeff * t.exp[i];
    d.exp[i] = static_cast<std::uint8_t>(t.exp[i] - 1);
    p.terms_.push_back(d);
  }
  p.normalize();
  return p;
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
  Polynomial p(nvars_);
  p.terms_ = terms_;
  p.terms_.insert(p.terms_.end(), o.terms_.begin(), o.terms_.end());
  p.normalize();
  return p;
}

Polynomial Polynomial::operator-(const Polynomial& o) const {
  return *this + o.scaled(-1.0);
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
  Polynomial p(nvars_);
  for (const auto& ta : terms_) {
    for (const auto& tb : o.terms_) {
      Term t;
      t.coeff = ta.coeff * tb.coeff;
      for (int i = 0; i < kMaxDim; ++i)
        t.exp[i] = static_cast<std::uint8_t>(ta.exp[i] + tb.exp[i]);
      p.terms_.push_back(t);
    }
  }
  p.normalize();
  return p;
}

Polynomial Polynomial::scaled(double s) const {
  Polynomial p = *this;
  for (auto& t : p.terms_) t.coeff *= s;
  p.normalize();
  return p;
}

Polynomial Polynomial::compose(const std::vector<Polynomial>& args) const {
  int out_vars = args.empty() ? 0 : args[0].nvars();
  Polynomial result(out_vars);
  for (const auto& t : terms_) {
    Polynomial term = Polynomial::constant(out_vars, t.coeff);
    for (int i = 0; i < nvars_; ++i)
      for (int e = 0; e < t.exp[i]; ++e) term = term * args[i];
    result = result + term;
  }
  return result;
}

Polynomial Polynomial::substitute(int i, double value) const {
  Polynomial p(nvars_ - 1);
  for (const auto& t : terms_) {
    Term nt;
    nt.coeff = t.coeff * std::pow(value, t.exp[i]);
    int k = 0;
    for (int j = 0; j < nvars_; ++j) {
      if (j == i) continue;
      nt.exp[k++] = t.exp[j];
    }
    p.terms_.push_back(nt);
  }
  p.normalize();
  return p;
}

bool Polynomial::operator==(const Polynomial& o) const {
  return nvars_ == o.nvars_ && terms_.size() == o.terms_.size() &&
         std::equal(terms_.begin(), terms_.end(), o.terms_.begin(),
                    [](const Term& a, const Term& b) {
                      return a.coeff == b.coeff && a.exp == b.exp;
                    });
}

void Polynomial::normalize() {
  std::sort(terms_.begin(), terms_.end(), exp_less);
  std::vector<Term> merged;
  for (const auto& t : terms_) {
    if (!merged.empty() && merged.back().exp == t.exp) {
      merged.back().coeff += t.coeff;
    } else {
      merged.push_back(t);
    }
  }
  merged.erase(std::remove_if(merged.begin(), merged.end(),
                              [](const Term& t) { return t.coeff == 0.0; }),
               merged.end());
  terms_ = std::move(merged);
}

}  // namespace currents
