#include "mplectic/poly_form.hpp"

#include <string>
#include <utility>

namespace mplectic {

PolyForm::PolyForm(int nvars, int degree) : nvars_(nvars), degree_(degree) {
  if (nvars < 0 || degree < 0) throw std::invalid_argument("negative chart dimension or degree");
}

PolyForm PolyForm::term(const MultiIndex& mi, Polynomial coeff) {
  PolyForm f(mi.dim(), mi.degree());
  f.add_term(mi, coeff);
  return f;
}

PolyForm PolyForm::from_const(const ConstForm& f) {
  PolyForm out(f.dim(), f.degree());
  if (f.degree() > f.dim()) return out;
  const auto indices = all_multiindices(f.dim(), f.degree());
  for (std::size_t r = 0; r < indices.size(); ++r)
    if (f.coeffs()[r] != 0) out.add_term(indices[r], Polynomial::constant(f.dim(), f.coeffs()[r]));
  return out;
}

PolyForm PolyForm::function(Polynomial p) {
  PolyForm f(p.nvars(), 0);
  f.add_term(MultiIndex(p.nvars(), std::vector<int>{}), p);
  return f;
}

Polynomial PolyForm::coeff(const MultiIndex& mi) const {
  auto it = terms_.find(mi);
  return it == terms_.end() ? Polynomial(nvars_) : it->second;
}

void PolyForm::add_term(const MultiIndex& mi, const Polynomial& coeff) {
  if (mi.dim() != nvars_ || mi.degree() != degree_) throw std::invalid_argument("multi-index shape mismatch");
  if (coeff.nvars() != nvars_) throw std::invalid_argument("coefficient lives on a different chart");
  if (coeff.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(mi, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

void PolyForm::require_same_shape(const PolyForm& other) const {
  if (nvars_ != other.nvars_ || degree_ != other.degree_)
    throw std::invalid_argument("form shape mismatch: (" + std::to_string(nvars_) + ", " + std::to_string(degree_) +
                                ") vs (" + std::to_string(other.nvars_) + ", " + std::to_string(other.degree_) + ")");
}

PolyForm& PolyForm::operator+=(const PolyForm& other) {
  require_same_shape(other);
  for (const auto& [mi, c] : other.terms_) add_term(mi, c);
  return *this;
}

PolyForm& PolyForm::operator-=(const PolyForm& other) {
  require_same_shape(other);
  for (const auto& [mi, c] : other.terms_) add_term(mi, -c);
  return *this;
}

PolyForm& PolyForm::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [mi, p] : terms_) p *= c;
  return *this;
}

PolyForm& PolyForm::operator*=(const Polynomial& p) {
  std::map<MultiIndex, Polynomial> out;
  for (auto& [mi, c] : terms_) {
    Polynomial product = c * p;
    if (!product.is_zero()) out.emplace(mi, std::move(product));
  }
  terms_ = std::move(out);
  return *this;
}

ConstForm PolyForm::evaluate_at(std::span<const Rational> point) const {
  ConstForm out(nvars_, degree_);
  for (const auto& [mi, c] : terms_) out.set_coeff(mi, c.evaluate(point));
  return out;
}

bool PolyForm::has_constant_coefficients() const {
  for (const auto& [mi, c] : terms_)
    if (!c.is_constant()) return false;
  return true;
}

PolyForm wedge(const PolyForm& f, const PolyForm& g) {
  if (f.nvars() != g.nvars()) throw std::invalid_argument("wedge of forms on different charts");
  PolyForm out(f.nvars(), f.degree() + g.degree());
  std::vector<int> merged;
  for (const auto& [fi, fc] : f.terms()) {
    for (const auto& [gi, gc] : g.terms()) {
      merged = fi.indices();
      merged.insert(merged.end(), gi.indices().begin(), gi.indices().end());
      const int sign = sort_with_sign(merged);
      if (sign == 0) continue;
      Polynomial c = fc * gc;
      if (sign < 0) c *= -1;
      out.add_term(MultiIndex(f.nvars(), merged), c);
    }
  }
  return out;
}

PolyForm coordinate_differential(int nvars, int i) {
  return PolyForm::term(MultiIndex(nvars, {i}), Polynomial::constant(nvars, 1));
}

PolyForm exterior_derivative(const PolyForm& w) {
  const int n = w.nvars();
  PolyForm out(n, w.degree() + 1);
  if (w.degree() >= n) return out;
  std::vector<int> merged;
  for (const auto& [mi, c] : w.terms()) {
    for (int a = 1; a <= n; ++a) {
      if (mi.contains(a)) continue;
      Polynomial partial = c.derivative(a);
      if (partial.is_zero()) continue;
      merged = mi.indices();
      merged.insert(merged.begin(), a);
      if (sort_with_sign(merged) < 0) partial *= -1;
      out.add_term(MultiIndex(n, merged), partial);
    }
  }
  return out;
}

VectorPolyForm::VectorPolyForm(std::vector<PolyForm> components) : components_(std::move(components)) {
  if (components_.empty()) throw std::invalid_argument("vector form needs at least one component");
  for (const auto& c : components_)
    if (c.nvars() != components_.front().nvars() || c.degree() != components_.front().degree())
      throw std::invalid_argument("components must share chart and degree");
}

bool VectorPolyForm::is_zero() const {
  for (const auto& c : components_)
    if (!c.is_zero()) return false;
  return true;
}

VectorPolyForm operator-(const VectorPolyForm& a, const VectorPolyForm& b) {
  if (a.arity() != b.arity()) throw std::invalid_argument("vector forms of different arity");
  std::vector<PolyForm> out;
  out.reserve(a.arity());
  for (std::size_t i = 0; i < a.arity(); ++i) out.push_back(a.components_[i] - b.components_[i]);
  return VectorPolyForm(std::move(out));
}

VectorPolyForm exterior_derivative(const VectorPolyForm& w) {
  std::vector<PolyForm> out;
  out.reserve(w.arity());
  for (const auto& c : w.components()) out.push_back(exterior_derivative(c));
  return VectorPolyForm(std::move(out));
}

PolyMap::PolyMap(int source, std::vector<Polynomial> components) : source_(source), components_(std::move(components)) {
  for (const auto& c : components_)
    if (c.nvars() != source_) throw std::invalid_argument("map component is not a polynomial on the source chart");
}

PolyMap PolyMap::identity(int n) {
  std::vector<Polynomial> comps;
  comps.reserve(static_cast<std::size_t>(n));
  for (int i = 1; i <= n; ++i) comps.push_back(Polynomial::variable(n, i));
  return PolyMap(n, std::move(comps));
}

PolyMap compose(const PolyMap& outer, const PolyMap& inner) {
  if (outer.source() != inner.target()) throw std::invalid_argument("maps do not compose");
  std::vector<Polynomial> comps;
  comps.reserve(outer.components().size());
  for (const auto& c : outer.components()) comps.push_back(c.substitute(inner.components()));
  return PolyMap(inner.source(), std::move(comps));
}

PolyForm pullback(const PolyMap& map, const PolyForm& w) {
  if (w.nvars() != map.target())
    throw std::invalid_argument("form lives on R^" + std::to_string(w.nvars()) + " but the map targets R^" +
                                std::to_string(map.target()));
  const int s = map.source();

  // dF_j, computed once per target coordinate that appears
  std::vector<PolyForm> differentials(static_cast<std::size_t>(map.target()));
  std::vector<bool> ready(differentials.size(), false);
  const auto dF = [&](int j) -> const PolyForm& {
    const auto idx = static_cast<std::size_t>(j - 1);
    if (!ready[idx]) {
      differentials[idx] = exterior_derivative(PolyForm::function(map.component(idx + 1)));
      ready[idx] = true;
    }
    return differentials[idx];
  };

  PolyForm out(s, w.degree());
  for (const auto& [mi, c] : w.terms()) {
    PolyForm piece = PolyForm::function(c.substitute(map.components()));
    for (int j : mi.indices()) {
      piece = wedge(piece, dF(j));
      if (piece.is_zero()) break;
    }
    if (!piece.is_zero()) out += piece;
  }
  return out;
}

VectorPolyForm pullback(const PolyMap& map, const VectorPolyForm& w) {
  std::vector<PolyForm> out;
  out.reserve(w.arity());
  for (const auto& c : w.components()) out.push_back(pullback(map, c));
  return VectorPolyForm(std::move(out));
}

}  // namespace mplectic
