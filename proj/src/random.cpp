#include "mplectic/random.hpp"

#include <algorithm>
#include <numeric>

namespace mplectic {

Rational random_rational(Rng& rng, int bound) {
  std::uniform_int_distribution<int> num(-bound, bound);
  std::uniform_int_distribution<int> den(1, bound);
  Rational r(num(rng), den(rng));
  r.canonicalize();
  return r;
}

Rational random_nonzero_rational(Rng& rng, int bound) {
  for (;;) {
    Rational r = random_rational(rng, bound);
    if (r != 0) return r;
  }
}

RationalVector random_vector(Rng& rng, int n, int bound) {
  RationalVector v;
  v.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) v.push_back(random_rational(rng, bound));
  return v;
}

ConstForm random_const_form(Rng& rng, int n, int degree, double sparsity) {
  std::bernoulli_distribution zero(sparsity);
  ConstForm f(n, degree);
  RationalVector coeffs(f.coeffs().size());
  for (auto& c : coeffs) c = zero(rng) ? Rational(0) : random_nonzero_rational(rng);
  return ConstForm(n, degree, std::move(coeffs));
}

OperadElement random_operad_element(Rng& rng, int n, int k, std::size_t m) {
  for (;;) {
    std::vector<ConstForm> comps;
    comps.reserve(m);
    for (std::size_t i = 0; i < m; ++i) comps.push_back(random_const_form(rng, n, k + 1));
    VectorValuedForm w(std::move(comps));
    if (is_nondegenerate(w)) return OperadElement(std::move(w));
  }
}

Permutation random_permutation(Rng& rng, std::size_t m) {
  auto images = Permutation::identity(m).images();
  // Fisher-Yates with an explicit distribution so the sequence is portable across
  // standard library implementations of std::shuffle.
  for (std::size_t i = m; i > 1; --i) {
    std::uniform_int_distribution<std::size_t> pick(0, i - 1);
    std::swap(images[i - 1], images[pick(rng)]);
  }
  return Permutation(std::move(images));
}

Polynomial random_polynomial(Rng& rng, int nvars, unsigned max_degree, int max_terms) {
  std::uniform_int_distribution<int> count(1, max_terms);
  std::uniform_int_distribution<unsigned> degree(0, max_degree);
  std::uniform_int_distribution<int> var(0, nvars - 1);
  Polynomial p(nvars);
  const int terms = count(rng);
  for (int t = 0; t < terms; ++t) {
    Exponents e(static_cast<std::size_t>(nvars), 0);
    const unsigned d = nvars > 0 ? degree(rng) : 0;
    for (unsigned s = 0; s < d; ++s) ++e[static_cast<std::size_t>(var(rng))];
    p.add_term(e, random_nonzero_rational(rng, 4));
  }
  return p;
}

PolyForm random_poly_form(Rng& rng, int nvars, int degree, unsigned max_degree, int max_terms) {
  PolyForm f(nvars, degree);
  const auto indices = all_multiindices(nvars, degree);
  if (indices.empty()) return f;
  std::uniform_int_distribution<std::size_t> pick(0, indices.size() - 1);
  std::uniform_int_distribution<int> count(1, max_terms);
  const int terms = count(rng);
  for (int t = 0; t < terms; ++t) f.add_term(indices[pick(rng)], random_polynomial(rng, nvars, max_degree, 2));
  return f;
}

PolyMap random_poly_map(Rng& rng, int source, int target, unsigned max_degree, int max_terms) {
  std::vector<Polynomial> comps;
  comps.reserve(static_cast<std::size_t>(target));
  for (int j = 0; j < target; ++j) comps.push_back(random_polynomial(rng, source, max_degree, max_terms));
  return PolyMap(source, std::move(comps));
}

}  // namespace mplectic
