#include "mplectic/polynomial.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

namespace mplectic {

Polynomial Polynomial::constant(int nvars, const Rational& c) {
  Polynomial p(nvars);
  p.add_term(Exponents(static_cast<std::size_t>(nvars), 0), c);
  return p;
}

Polynomial Polynomial::variable(int nvars, int i) {
  if (i < 1 || i > nvars) throw std::invalid_argument("variable index out of range");
  Exponents e(static_cast<std::size_t>(nvars), 0);
  e[static_cast<std::size_t>(i - 1)] = 1;
  Polynomial p(nvars);
  p.add_term(e, 1);
  return p;
}

Polynomial Polynomial::monomial(const Rational& c, Exponents exps) {
  Polynomial p(static_cast<int>(exps.size()));
  p.add_term(exps, c);
  return p;
}

bool Polynomial::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && total_degree() == 0);
}

Rational Polynomial::constant_term() const {
  auto it = terms_.find(Exponents(static_cast<std::size_t>(nvars_), 0));
  return it == terms_.end() ? Rational(0) : it->second;
}

unsigned Polynomial::total_degree() const {
  unsigned best = 0;
  for (const auto& [e, c] : terms_) best = std::max(best, std::accumulate(e.begin(), e.end(), 0u));
  return best;
}

void Polynomial::add_term(const Exponents& exps, const Rational& c) {
  if (static_cast<int>(exps.size()) != nvars_) throw std::invalid_argument("exponent vector has wrong length");
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(exps, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

void Polynomial::require_same_vars(const Polynomial& other) const {
  if (nvars_ != other.nvars_)
    throw std::invalid_argument("polynomials in " + std::to_string(nvars_) + " and " + std::to_string(other.nvars_) +
                                " variables");
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
  require_same_vars(other);
  for (const auto& [e, c] : other.terms_) add_term(e, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) {
  require_same_vars(other);
  for (const auto& [e, c] : other.terms_) add_term(e, -c);
  return *this;
}

Polynomial& Polynomial::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, v] : terms_) v *= c;
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  a.require_same_vars(b);
  Polynomial out(a.nvars_);
  Exponents e(static_cast<std::size_t>(a.nvars_));
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      for (std::size_t v = 0; v < e.size(); ++v) e[v] = ea[v] + eb[v];
      out.add_term(e, ca * cb);
    }
  }
  return out;
}

Polynomial Polynomial::derivative(int i) const {
  if (i < 1 || i > nvars_) throw std::invalid_argument("variable index out of range");
  const auto v = static_cast<std::size_t>(i - 1);
  Polynomial out(nvars_);
  for (const auto& [e, c] : terms_) {
    if (e[v] == 0) continue;
    Exponents d = e;
    --d[v];
    out.add_term(d, c * e[v]);
  }
  return out;
}

Rational Polynomial::evaluate(std::span<const Rational> point) const {
  if (static_cast<int>(point.size()) != nvars_) throw std::invalid_argument("evaluation point has wrong dimension");
  Rational total = 0;
  Rational power;
  for (const auto& [e, c] : terms_) {
    Rational term = c;
    for (std::size_t v = 0; v < e.size(); ++v) {
      if (e[v] == 0) continue;
      mpz_pow_ui(power.get_num_mpz_t(), point[v].get_num_mpz_t(), e[v]);
      mpz_pow_ui(power.get_den_mpz_t(), point[v].get_den_mpz_t(), e[v]);
      term *= power;
    }
    total += term;
  }
  return total;
}

Polynomial Polynomial::substitute(std::span<const Polynomial> values) const {
  if (static_cast<int>(values.size()) != nvars_) throw std::invalid_argument("substitution needs one value per variable");
  if (values.empty()) return *this;
  const int target = values.front().nvars();
  for (const auto& v : values) v.require_same_vars(values.front());

  // powers[v][p] = values[v]^p, filled on demand
  std::vector<std::vector<Polynomial>> powers(values.size());
  const auto power = [&](std::size_t v, unsigned p) -> const Polynomial& {
    auto& cache = powers[v];
    if (cache.empty()) cache.push_back(constant(target, 1));
    while (cache.size() <= p) cache.push_back(cache.back() * values[v]);
    return cache[p];
  };

  Polynomial out(target);
  for (const auto& [e, c] : terms_) {
    Polynomial term = constant(target, c);
    for (std::size_t v = 0; v < e.size(); ++v)
      if (e[v] != 0) term = term * power(v, e[v]);
    out += term;
  }
  return out;
}

Polynomial Polynomial::translate(std::span<const Rational> shift) const {
  if (static_cast<int>(shift.size()) != nvars_) throw std::invalid_argument("shift has wrong dimension");
  std::vector<Polynomial> values;
  values.reserve(shift.size());
  for (int i = 1; i <= nvars_; ++i)
    values.push_back(variable(nvars_, i) + constant(nvars_, shift[static_cast<std::size_t>(i - 1)]));
  return substitute(values);
}

}  // namespace mplectic
