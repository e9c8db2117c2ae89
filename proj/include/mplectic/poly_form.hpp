#pragma once

// Differential forms with polynomial coefficients on a single coordinate chart
// R^N, polynomial maps between charts, and the operations d and pullback.

#include "mplectic/exterior.hpp"
#include "mplectic/polynomial.hpp"

#include <map>
#include <span>
#include <stdexcept>
#include <vector>

namespace mplectic {

/// sum_I c_I(x) dx_I with polynomial coefficients. Degrees above nvars are the zero form.
class PolyForm {
 public:
  PolyForm() = default;
  PolyForm(int nvars, int degree);

  /// c dx_I.
  static PolyForm term(const MultiIndex& mi, Polynomial coeff);
  /// A constant-coefficient form viewed on the chart.
  static PolyForm from_const(const ConstForm& f);
  /// The function p as a 0-form.
  static PolyForm function(Polynomial p);

  int nvars() const { return nvars_; }
  int degree() const { return degree_; }
  const std::map<MultiIndex, Polynomial>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Polynomial coeff(const MultiIndex& mi) const;

  void add_term(const MultiIndex& mi, const Polynomial& coeff);

  PolyForm& operator+=(const PolyForm& other);
  PolyForm& operator-=(const PolyForm& other);
  PolyForm& operator*=(const Rational& c);
  /// Multiplication by a function.
  PolyForm& operator*=(const Polynomial& p);

  friend PolyForm operator+(PolyForm a, const PolyForm& b) { return a += b; }
  friend PolyForm operator-(PolyForm a, const PolyForm& b) { return a -= b; }
  friend PolyForm operator*(const Rational& c, PolyForm a) { return a *= c; }
  friend PolyForm operator*(const Polynomial& p, PolyForm a) { return a *= p; }
  friend bool operator==(const PolyForm&, const PolyForm&) = default;

  /// Value at a point as a constant-coefficient form.
  ConstForm evaluate_at(std::span<const Rational> point) const;
  /// True when every coefficient is a constant polynomial.
  bool has_constant_coefficients() const;

 private:
  void require_same_shape(const PolyForm& other) const;

  int nvars_ = 0;
  int degree_ = 0;
  std::map<MultiIndex, Polynomial> terms_;
};

PolyForm wedge(const PolyForm& f, const PolyForm& g);

/// dx_i as a 1-form on R^nvars.
PolyForm coordinate_differential(int nvars, int i);

/// Exterior derivative; d(c dx_I) = sum_a dc/dx_a dx_a ^ dx_I.
PolyForm exterior_derivative(const PolyForm& w);

/// Ordered list of m forms of common (nvars, degree).
class VectorPolyForm {
 public:
  /// Throws std::invalid_argument for an empty list or mismatched shapes.
  explicit VectorPolyForm(std::vector<PolyForm> components);

  int nvars() const { return components_.front().nvars(); }
  int degree() const { return components_.front().degree(); }
  std::size_t arity() const { return components_.size(); }
  const std::vector<PolyForm>& components() const { return components_; }
  const PolyForm& component(std::size_t i) const { return components_.at(i - 1); }
  bool is_zero() const;

  friend VectorPolyForm operator-(const VectorPolyForm& a, const VectorPolyForm& b);
  friend bool operator==(const VectorPolyForm&, const VectorPolyForm&) = default;

 private:
  std::vector<PolyForm> components_;
};

VectorPolyForm exterior_derivative(const VectorPolyForm& w);

/// Polynomial map R^source -> R^target, one polynomial per target coordinate.
class PolyMap {
 public:
  /// Throws std::invalid_argument if a component is not a polynomial in `source` variables.
  PolyMap(int source, std::vector<Polynomial> components);

  static PolyMap identity(int n);

  int source() const { return source_; }
  int target() const { return static_cast<int>(components_.size()); }
  const std::vector<Polynomial>& components() const { return components_; }
  /// 1-based.
  const Polynomial& component(std::size_t j) const { return components_.at(j - 1); }

  friend bool operator==(const PolyMap&, const PolyMap&) = default;

 private:
  int source_ = 0;
  std::vector<Polynomial> components_;
};

/// outer o inner.
PolyMap compose(const PolyMap& outer, const PolyMap& inner);

/// F^* w: substitute F into the coefficients and dy_j -> sum_a dF_j/dx_a dx_a.
PolyForm pullback(const PolyMap& map, const PolyForm& w);
VectorPolyForm pullback(const PolyMap& map, const VectorPolyForm& w);

}  // namespace mplectic
