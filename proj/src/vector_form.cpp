#include "mplectic/vector_form.hpp"

#include <stdexcept>
#include <string>
#include <utility>

namespace mplectic {

VectorValuedForm::VectorValuedForm(std::vector<ConstForm> components) : components_(std::move(components)) {
  if (components_.empty()) throw std::invalid_argument("vector-valued form needs at least one component");
  const int n = components_.front().dim();
  const int d = components_.front().degree();
  for (const auto& c : components_)
    if (c.dim() != n || c.degree() != d) throw std::invalid_argument("components must share dimension and degree");
  if (d < 2 || d > n)
    throw std::invalid_argument("component degree " + std::to_string(d) + " outside [2, " + std::to_string(n) +
                                "]; need 1 <= k <= n-1");
}

VectorValuedForm VectorValuedForm::scaled(const Rational& factor) const {
  std::vector<ConstForm> out = components_;
  for (auto& c : out) c *= factor;
  return VectorValuedForm(std::move(out));
}

RationalVector evaluate_vv(const VectorValuedForm& w, std::span<const RationalVector> vectors) {
  RationalVector out;
  out.reserve(w.arity());
  for (const auto& c : w.components()) out.push_back(evaluate(c, vectors));
  return out;
}

RationalMatrix contraction_matrix(const VectorValuedForm& w) {
  const int n = w.dim();
  const int d = w.degree();
  const std::size_t block = binomial(n, d - 1);
  RationalMatrix m(w.arity() * block, static_cast<std::size_t>(n));
  const auto indices = all_multiindices(n, d);
  for (std::size_t i = 0; i < w.arity(); ++i) {
    const auto& coeffs = w.components()[i].coeffs();
    for (std::size_t r = 0; r < indices.size(); ++r) {
      if (coeffs[r] == 0) continue;
      // omega(e_a, e_J) picks up sign (-1)^pos from moving a to the front.
      const MultiIndex& mi = indices[r];
      for (std::size_t pos = 0; pos < mi.indices().size(); ++pos) {
        const std::size_t row = i * block + rank_of(mi.without(pos));
        const auto col = static_cast<std::size_t>(mi[pos] - 1);
        m(row, col) = pos % 2 == 0 ? coeffs[r] : Rational(-coeffs[r]);
      }
    }
  }
  return m;
}

bool is_nondegenerate(const VectorValuedForm& w) {
  return rank(contraction_matrix(w)) == static_cast<std::size_t>(w.dim());
}

VectorValuedForm cross_product_form() {
  return VectorValuedForm({
      ConstForm::basis(MultiIndex(3, {2, 3})),
      ConstForm::basis(MultiIndex(3, {1, 3}), -1),
      ConstForm::basis(MultiIndex(3, {1, 2})),
  });
}

VectorValuedForm direct_sum_form(const std::vector<ConstForm>& symplectic_forms) {
  if (symplectic_forms.empty()) throw std::invalid_argument("direct sum of no forms");
  const int n = symplectic_forms.front().dim();
  for (const auto& f : symplectic_forms) {
    if (f.degree() != 2) throw std::invalid_argument("direct_sum_form expects 2-forms");
    if (f.dim() != n) throw std::invalid_argument("direct_sum_form expects a common dimension");
  }
  if (n % 2 != 0) throw std::invalid_argument("symplectic forms live on even-dimensional spaces");
  return VectorValuedForm(symplectic_forms);
}

ConstForm standard_symplectic_form(int n) {
  if (n < 2 || n % 2 != 0) throw std::invalid_argument("standard symplectic form needs even n >= 2");
  ConstForm f(n, 2);
  for (int i = 1; i < n; i += 2) f.set_coeff(MultiIndex(n, {i, i + 1}), 1);
  return f;
}

}  // namespace mplectic
