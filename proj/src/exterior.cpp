#include "mplectic/exterior.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <utility>

namespace mplectic {

MultiIndex::MultiIndex(int dim, std::vector<int> indices) : dim_(dim), indices_(std::move(indices)) {
  if (dim_ < 0) throw std::invalid_argument("negative dimension");
  for (std::size_t i = 0; i < indices_.size(); ++i) {
    if (indices_[i] < 1 || indices_[i] > dim_)
      throw std::invalid_argument("multi-index entry " + std::to_string(indices_[i]) +
                                  " outside [1, " + std::to_string(dim_) + "]");
    if (i > 0 && indices_[i] <= indices_[i - 1])
      throw std::invalid_argument("multi-index entries must be strictly increasing");
  }
}

bool MultiIndex::contains(int index) const {
  return std::binary_search(indices_.begin(), indices_.end(), index);
}

MultiIndex MultiIndex::without(std::size_t pos) const {
  MultiIndex out;
  out.dim_ = dim_;
  out.indices_ = indices_;
  out.indices_.erase(out.indices_.begin() + static_cast<std::ptrdiff_t>(pos));
  return out;
}

std::uint64_t rank_of(const MultiIndex& mi) {
  const int n = mi.dim();
  const int d = mi.degree();
  std::uint64_t rank = 0;
  int prev = 0;
  for (int t = 0; t < d; ++t) {
    for (int v = prev + 1; v < mi[static_cast<std::size_t>(t)]; ++v) rank += binomial(n - v, d - t - 1);
    prev = mi[static_cast<std::size_t>(t)];
  }
  return rank;
}

MultiIndex multiindex_at(int n, int d, std::uint64_t rank) {
  if (d < 0 || rank >= binomial(n, d))
    throw std::out_of_range("rank " + std::to_string(rank) + " out of range for C(" + std::to_string(n) +
                            ", " + std::to_string(d) + ")");
  std::vector<int> indices;
  indices.reserve(static_cast<std::size_t>(d));
  int v = 1;
  for (int t = 0; t < d; ++t) {
    for (;;) {
      const std::uint64_t block = binomial(n - v, d - t - 1);
      if (rank < block) break;
      rank -= block;
      ++v;
    }
    indices.push_back(v);
    ++v;
  }
  return MultiIndex(n, std::move(indices));
}

std::vector<MultiIndex> all_multiindices(int n, int d) {
  std::vector<MultiIndex> out;
  if (d < 0 || d > n) return out;
  out.reserve(binomial(n, d));
  std::vector<int> current(static_cast<std::size_t>(d));
  for (int i = 0; i < d; ++i) current[static_cast<std::size_t>(i)] = i + 1;
  for (;;) {
    out.emplace_back(n, current);
    int pos = d - 1;
    while (pos >= 0 && current[static_cast<std::size_t>(pos)] == n - d + pos + 1) --pos;
    if (pos < 0) break;
    ++current[static_cast<std::size_t>(pos)];
    for (int i = pos + 1; i < d; ++i)
      current[static_cast<std::size_t>(i)] = current[static_cast<std::size_t>(i - 1)] + 1;
  }
  return out;
}

int sort_with_sign(std::vector<int>& indices) {
  int sign = 1;
  // insertion sort; sequences are short
  for (std::size_t i = 1; i < indices.size(); ++i) {
    for (std::size_t j = i; j > 0 && indices[j - 1] >= indices[j]; --j) {
      if (indices[j - 1] == indices[j]) return 0;
      std::swap(indices[j - 1], indices[j]);
      sign = -sign;
    }
  }
  return sign;
}

ConstForm::ConstForm(int dim, int degree) : dim_(dim), degree_(degree) {
  if (dim < 0 || degree < 0) throw std::invalid_argument("negative dimension or degree");
  coeffs_.assign(binomial(dim, degree), Rational(0));
}

ConstForm::ConstForm(int dim, int degree, RationalVector coeffs)
    : dim_(dim), degree_(degree), coeffs_(std::move(coeffs)) {
  if (dim < 0 || degree < 0) throw std::invalid_argument("negative dimension or degree");
  if (coeffs_.size() != binomial(dim, degree))
    throw std::invalid_argument("expected " + std::to_string(binomial(dim, degree)) +
                                " coefficients, got " + std::to_string(coeffs_.size()));
}

ConstForm ConstForm::basis(const MultiIndex& mi, const Rational& coeff) {
  ConstForm f(mi.dim(), mi.degree());
  f.coeffs_[rank_of(mi)] = coeff;
  return f;
}

ConstForm ConstForm::scalar(int dim, const Rational& value) { return ConstForm(dim, 0, {value}); }

ConstForm ConstForm::coordinate(int dim, int i) { return basis(MultiIndex(dim, {i})); }

const Rational& ConstForm::coeff(const MultiIndex& mi) const {
  if (mi.dim() != dim_ || mi.degree() != degree_) throw std::invalid_argument("multi-index shape mismatch");
  return coeffs_[rank_of(mi)];
}

void ConstForm::set_coeff(const MultiIndex& mi, const Rational& value) {
  if (mi.dim() != dim_ || mi.degree() != degree_) throw std::invalid_argument("multi-index shape mismatch");
  coeffs_[rank_of(mi)] = value;
}

bool ConstForm::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rational& c) { return c == 0; });
}

void ConstForm::require_same_shape(const ConstForm& other) const {
  if (dim_ != other.dim_ || degree_ != other.degree_) throw std::invalid_argument("form shape mismatch");
}

ConstForm& ConstForm::operator+=(const ConstForm& other) {
  require_same_shape(other);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
  return *this;
}

ConstForm& ConstForm::operator-=(const ConstForm& other) {
  require_same_shape(other);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= other.coeffs_[i];
  return *this;
}

ConstForm& ConstForm::operator*=(const Rational& scalar) {
  for (auto& c : coeffs_) c *= scalar;
  return *this;
}

Rational determinant(std::vector<RationalVector> rows) {
  const std::size_t n = rows.size();
  Rational det = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && rows[pivot][col] == 0) ++pivot;
    if (pivot == n) return 0;
    if (pivot != col) {
      std::swap(rows[pivot], rows[col]);
      det = -det;
    }
    det *= rows[col][col];
    for (std::size_t r = col + 1; r < n; ++r) {
      if (rows[r][col] == 0) continue;
      const Rational factor = rows[r][col] / rows[col][col];
      for (std::size_t c = col; c < n; ++c) rows[r][c] -= factor * rows[col][c];
    }
  }
  return det;
}

Rational evaluate(const ConstForm& f, std::span<const RationalVector> vectors) {
  const int d = f.degree();
  if (static_cast<int>(vectors.size()) != d)
    throw std::invalid_argument("expected " + std::to_string(d) + " argument vectors, got " +
                                std::to_string(vectors.size()));
  for (const auto& v : vectors)
    if (static_cast<int>(v.size()) != f.dim()) throw std::invalid_argument("argument vector has wrong dimension");
  if (d == 0) return f.coeffs()[0];

  Rational total = 0;
  const auto indices = all_multiindices(f.dim(), d);
  std::vector<RationalVector> minor(static_cast<std::size_t>(d), RationalVector(static_cast<std::size_t>(d)));
  for (std::size_t r = 0; r < indices.size(); ++r) {
    const Rational& c = f.coeffs()[r];
    if (c == 0) continue;
    for (int row = 0; row < d; ++row)
      for (int col = 0; col < d; ++col)
        minor[static_cast<std::size_t>(row)][static_cast<std::size_t>(col)] =
            vectors[static_cast<std::size_t>(row)][static_cast<std::size_t>(indices[r][static_cast<std::size_t>(col)] - 1)];
    total += c * determinant(minor);
  }
  return total;
}

ConstForm wedge(const ConstForm& f, const ConstForm& g) {
  if (f.dim() != g.dim()) throw std::invalid_argument("wedge of forms on different spaces");
  const int n = f.dim();
  ConstForm out(n, f.degree() + g.degree());
  if (f.degree() + g.degree() > n) return out;

  const auto fi = all_multiindices(n, f.degree());
  const auto gi = all_multiindices(n, g.degree());
  std::vector<int> merged;
  for (std::size_t a = 0; a < fi.size(); ++a) {
    const Rational& cf = f.coeffs()[a];
    if (cf == 0) continue;
    for (std::size_t b = 0; b < gi.size(); ++b) {
      const Rational& cg = g.coeffs()[b];
      if (cg == 0) continue;
      merged = fi[a].indices();
      merged.insert(merged.end(), gi[b].indices().begin(), gi[b].indices().end());
      const int sign = sort_with_sign(merged);
      if (sign == 0) continue;
      const MultiIndex target(n, merged);
      Rational term = cf * cg;
      if (sign < 0) term = -term;
      out.set_coeff(target, out.coeff(target) + term);
    }
  }
  return out;
}

ConstForm contract(const ConstForm& f, std::span<const Rational> v) {
  if (f.degree() == 0) throw std::invalid_argument("cannot contract a degree-0 form");
  if (static_cast<int>(v.size()) != f.dim()) throw std::invalid_argument("contraction vector has wrong dimension");
  ConstForm out(f.dim(), f.degree() - 1);
  const auto indices = all_multiindices(f.dim(), f.degree());
  for (std::size_t r = 0; r < indices.size(); ++r) {
    const Rational& c = f.coeffs()[r];
    if (c == 0) continue;
    const MultiIndex& mi = indices[r];
    for (std::size_t a = 0; a < mi.indices().size(); ++a) {
      const Rational& va = v[static_cast<std::size_t>(mi[a] - 1)];
      if (va == 0) continue;
      const MultiIndex rest = mi.without(a);
      Rational term = c * va;
      if (a % 2 == 1) term = -term;
      out.set_coeff(rest, out.coeff(rest) + term);
    }
  }
  return out;
}

}  // namespace mplectic
