#pragma once

// Multi-index combinatorics and constant-coefficient alternating forms on R^n.
//
// Coordinates and multi-index entries are 1-based throughout, so dq_1 ^ dq_3
// on R^3 is the MultiIndex {1, 3}. Dense storage is indexed by the
// lexicographic rank of the multi-index.

#include "mplectic/rational.hpp"

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

namespace mplectic {

class MultiIndex {
 public:
  MultiIndex() = default;
  /// Throws std::invalid_argument unless the entries are strictly increasing in [1, dim].
  MultiIndex(int dim, std::vector<int> indices);
  MultiIndex(int dim, std::initializer_list<int> indices)
      : MultiIndex(dim, std::vector<int>(indices)) {}

  int dim() const { return dim_; }
  int degree() const { return static_cast<int>(indices_.size()); }
  const std::vector<int>& indices() const { return indices_; }
  int operator[](std::size_t pos) const { return indices_[pos]; }
  bool contains(int index) const;

  /// Same multi-index with the entry at `pos` removed.
  MultiIndex without(std::size_t pos) const;

  friend bool operator==(const MultiIndex&, const MultiIndex&) = default;
  friend auto operator<=>(const MultiIndex&, const MultiIndex&) = default;

 private:
  int dim_ = 0;
  std::vector<int> indices_;
};

/// Lexicographic rank in [0, binomial(n, d)).
std::uint64_t rank_of(const MultiIndex& mi);
/// Inverse of rank_of. Throws std::out_of_range for a rank outside [0, binomial(n, d)).
MultiIndex multiindex_at(int n, int d, std::uint64_t rank);
/// All degree-d multi-indices on R^n in lexicographic order.
std::vector<MultiIndex> all_multiindices(int n, int d);

/// Sorts a sequence of distinct indices in place and returns the sign of the
/// sorting permutation, or 0 if an index repeats.
int sort_with_sign(std::vector<int>& indices);

/// Constant-coefficient alternating d-form on R^n. Degree 0 forms are scalars
/// and forms of degree > n are the (empty) zero form.
class ConstForm {
 public:
  ConstForm() = default;
  /// Zero form.
  ConstForm(int dim, int degree);
  /// Throws std::invalid_argument unless coeffs has binomial(dim, degree) entries.
  ConstForm(int dim, int degree, RationalVector coeffs);

  static ConstForm basis(const MultiIndex& mi, const Rational& coeff = 1);
  static ConstForm scalar(int dim, const Rational& value);
  /// dq_i as a 1-form on R^dim.
  static ConstForm coordinate(int dim, int i);

  int dim() const { return dim_; }
  int degree() const { return degree_; }
  const RationalVector& coeffs() const { return coeffs_; }

  const Rational& coeff(const MultiIndex& mi) const;
  void set_coeff(const MultiIndex& mi, const Rational& value);
  bool is_zero() const;

  ConstForm& operator+=(const ConstForm& other);
  ConstForm& operator-=(const ConstForm& other);
  ConstForm& operator*=(const Rational& scalar);

  friend ConstForm operator+(ConstForm a, const ConstForm& b) { return a += b; }
  friend ConstForm operator-(ConstForm a, const ConstForm& b) { return a -= b; }
  friend ConstForm operator-(ConstForm a) { return a *= -1; }
  friend ConstForm operator*(const Rational& s, ConstForm a) { return a *= s; }
  friend bool operator==(const ConstForm&, const ConstForm&) = default;

 private:
  void require_same_shape(const ConstForm& other) const;

  int dim_ = 0;
  int degree_ = 0;
  RationalVector coeffs_;
};

/// Determinant by exact elimination; `rows` is a square row-major matrix.
Rational determinant(std::vector<RationalVector> rows);

/// f(v_1, ..., v_d) as the sum of c_I times the I-columns minor of the argument matrix.
Rational evaluate(const ConstForm& f, std::span<const RationalVector> vectors);

ConstForm wedge(const ConstForm& f, const ConstForm& g);

/// Interior product v _| f, inserting v into the first slot.
ConstForm contract(const ConstForm& f, std::span<const Rational> v);

}  // namespace mplectic
