#pragma once

#include "mplectic/rational.hpp"

#include <cstddef>
#include <vector>

namespace mplectic {

/// Dense row-major matrix of exact rationals.
class RationalMatrix {
 public:
  RationalMatrix() = default;
  RationalMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  RationalVector row(std::size_t r) const;
  RationalVector column(std::size_t c) const;
  RationalVector multiply(const RationalVector& x) const;
  bool is_zero() const;

  friend bool operator==(const RationalMatrix&, const RationalMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

/// Rank by Bareiss fraction-free elimination. Each row is first cleared of
/// denominators, so every pivot step stays in the integers.
std::size_t rank(const RationalMatrix& m);

/// Basis of the right null space {x : m x = 0}, from the reduced row echelon form.
std::vector<RationalVector> kernel_basis(const RationalMatrix& m);

}  // namespace mplectic
