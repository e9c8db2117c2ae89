#pragma once

// Seeded generators for property runs. Everything here draws from a caller-owned
// std::mt19937_64 so a seed reproduces the exact same sequence of objects.

#include "mplectic/operad.hpp"
#include "mplectic/poly_form.hpp"

#include <random>

namespace mplectic {

using Rng = std::mt19937_64;

/// p/q with |p| <= bound, 1 <= q <= bound; may be zero.
Rational random_rational(Rng& rng, int bound = 5);
Rational random_nonzero_rational(Rng& rng, int bound = 5);
RationalVector random_vector(Rng& rng, int n, int bound = 5);

/// Dense constant form; each coefficient is zero with probability `sparsity`.
ConstForm random_const_form(Rng& rng, int n, int degree, double sparsity = 0.3);

/// Random element of P(m) on R^n with component degree k+1, by rejection.
OperadElement random_operad_element(Rng& rng, int n, int k, std::size_t m);

/// Uniformly shuffled permutation of m letters.
Permutation random_permutation(Rng& rng, std::size_t m);

/// Up to `max_terms` monomials of total degree <= max_degree.
Polynomial random_polynomial(Rng& rng, int nvars, unsigned max_degree, int max_terms = 3);
PolyForm random_poly_form(Rng& rng, int nvars, int degree, unsigned max_degree = 3, int max_terms = 3);
PolyMap random_poly_map(Rng& rng, int source, int target, unsigned max_degree = 2, int max_terms = 2);

}  // namespace mplectic
