#pragma once

#include "mplectic/rational.hpp"

#include <map>
#include <span>
#include <vector>

namespace mplectic {

using Exponents = std::vector<unsigned>;

/// Sparse multivariate polynomial with exact rational coefficients.
/// Variables are 1-based (x_1..x_nvars); zero coefficients are never stored.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(int nvars) : nvars_(nvars) {}

  static Polynomial constant(int nvars, const Rational& c);
  /// x_i.
  static Polynomial variable(int nvars, int i);
  static Polynomial monomial(const Rational& c, Exponents exps);

  int nvars() const { return nvars_; }
  const std::map<Exponents, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  /// Constant term.
  Rational constant_term() const;
  unsigned total_degree() const;

  void add_term(const Exponents& exps, const Rational& c);

  Polynomial& operator+=(const Polynomial& other);
  Polynomial& operator-=(const Polynomial& other);
  Polynomial& operator*=(const Rational& c);

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator-(Polynomial a) { return a *= -1; }
  friend Polynomial operator*(const Rational& c, Polynomial a) { return a *= c; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend bool operator==(const Polynomial&, const Polynomial&) = default;

  /// d/dx_i.
  Polynomial derivative(int i) const;
  Rational evaluate(std::span<const Rational> point) const;
  /// Substitutes x_i -> values[i-1]; the result lives in the variables of the values.
  Polynomial substitute(std::span<const Polynomial> values) const;
  /// p(x + shift).
  Polynomial translate(std::span<const Rational> shift) const;

 private:
  void require_same_vars(const Polynomial& other) const;

  int nvars_ = 0;
  std::map<Exponents, Rational> terms_;
};

}  // namespace mplectic
