#ifndef CURRENTS_POLYNOMIAL_HPP
#define CURRENTS_POLYNOMIAL_HPP

#include <array>
#include <cstdint>
#include <vector>

#include "currents/geometry.hpp"

namespace currents {

// Multivariate polynomial with double coefficients. Exponents are capped at
// kMaxDim variables; terms are kept sorted by exponent tuple so equality is
// structural.
class Polynomial {
 public:
  struct Term {
    double coeff = 0;
    std::array<std::uint8_t, kMaxDim> exp{};
  };

  Polynomial() = default;
  explicit Polynomial(int nvars) : nvars_(nvars) {}

  static Polynomial constant(int nvars, double c);
  static Polynomial variable(int nvars, int i);

  int nvars() const { return nvars_; }
  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  int total_degree() const;

  void add_term(double coeff, const std::vector<int>& exps);

  double eval(const Vec& u) const;
  Interval eval_interval(const Box& domain) const;
  Polynomial partial(int i) const;

  Polynomial operator+(const Polynomial& o) const;
  Polynomial operator-(const Polynomial& o) const;
  Polynomial operator*(const Polynomial& o) const;
  Polynomial scaled(double s) const;

  // Substitute polynomials (in a common variable set) for the variables.
  Polynomial compose(const std::vector<Polynomial>& args) const;

  // Fix variable i to the given value, producing a polynomial in one fewer
  // variable (remaining variables are renumbered downward past i).
  Polynomial substitute(int i, double value) const;

  bool operator==(const Polynomial& o) const;

 private:
  void normalize();

  int nvars_ = 0;
  std::vector<Term> terms_;
};

}  // namespace currents

#endif
