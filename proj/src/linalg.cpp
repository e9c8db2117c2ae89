#include "mplectic/linalg.hpp"

#include <stdexcept>
#include <utility>

namespace mplectic {

RationalVector RationalMatrix::row(std::size_t r) const {
  return RationalVector(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                        data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

RationalVector RationalMatrix::column(std::size_t c) const {
  RationalVector out(rows_);
  for (std::size_t r = 0; r < rows_; ++r) out[r] = (*this)(r, c);
  return out;
}

RationalVector RationalMatrix::multiply(const RationalVector& x) const {
  if (x.size() != cols_) throw std::invalid_argument("matrix-vector dimension mismatch");
  RationalVector out(rows_, Rational(0));
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c)
      if ((*this)(r, c) != 0) out[r] += (*this)(r, c) * x[c];
  return out;
}

bool RationalMatrix::is_zero() const {
  for (const auto& v : data_)
    if (v != 0) return false;
  return true;
}

std::size_t rank(const RationalMatrix& m) {
  // Integer rows, skipping zero rows; most contraction matrices are very sparse.
  std::vector<std::vector<Integer>> rows;
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Integer lcm = 1;
    bool nonzero = false;
    for (std::size_t c = 0; c < m.cols(); ++c) {
      const Rational& v = m(r, c);
      if (v == 0) continue;
      nonzero = true;
      mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), v.get_den().get_mpz_t());
    }
    if (!nonzero) continue;
    std::vector<Integer> row(m.cols());
    for (std::size_t c = 0; c < m.cols(); ++c) {
      const Rational& v = m(r, c);
      if (v != 0) row[c] = v.get_num() * (lcm / v.get_den());
    }
    rows.push_back(std::move(row));
  }

  const std::size_t nrows = rows.size();
  const std::size_t ncols = m.cols();
  std::size_t rank = 0;
  Integer prev_pivot = 1;
  for (std::size_t col = 0; col < ncols && rank < nrows; ++col) {
    std::size_t pivot = rank;
    while (pivot < nrows && rows[pivot][col] == 0) ++pivot;
    if (pivot == nrows) continue;
    std::swap(rows[pivot], rows[rank]);
    const Integer& p = rows[rank][col];
    for (std::size_t r = rank + 1; r < nrows; ++r) {
      const Integer factor = rows[r][col];
      for (std::size_t c = col + 1; c < ncols; ++c) {
        // Bareiss step: exact division by the previous pivot.
        Integer value = p * rows[r][c] - factor * rows[rank][c];
        mpz_divexact(value.get_mpz_t(), value.get_mpz_t(), prev_pivot.get_mpz_t());
        rows[r][c] = std::move(value);
      }
      rows[r][col] = 0;
    }
    prev_pivot = p;
    ++rank;
  }
  return rank;
}

std::vector<RationalVector> kernel_basis(const RationalMatrix& m) {
  RationalMatrix a = m;
  const std::size_t nrows = a.rows();
  const std::size_t ncols = a.cols();
  std::vector<std::size_t> pivot_cols;
  std::vector<bool> is_pivot(ncols, false);
  std::size_t r = 0;
  for (std::size_t col = 0; col < ncols && r < nrows; ++col) {
    std::size_t pivot = r;
    while (pivot < nrows && a(pivot, col) == 0) ++pivot;
    if (pivot == nrows) continue;
    if (pivot != r)
      for (std::size_t c = 0; c < ncols; ++c) std::swap(a(pivot, c), a(r, c));
    const Rational inv = 1 / a(r, col);
    for (std::size_t c = col; c < ncols; ++c) a(r, c) *= inv;
    for (std::size_t other = 0; other < nrows; ++other) {
      if (other == r || a(other, col) == 0) continue;
      const Rational factor = a(other, col);
      for (std::size_t c = col; c < ncols; ++c) a(other, c) -= factor * a(r, c);
    }
    pivot_cols.push_back(col);
    is_pivot[col] = true;
    ++r;
  }

  std::vector<RationalVector> basis;
  for (std::size_t free = 0; free < ncols; ++free) {
    if (is_pivot[free]) continue;
    RationalVector x(ncols, Rational(0));
    x[free] = 1;
    for (std::size_t i = 0; i < pivot_cols.size(); ++i) x[pivot_cols[i]] = -a(i, free);
    basis.push_back(std::move(x));
  }
  return basis;
}

}  // namespace mplectic
