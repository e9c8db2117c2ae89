#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace mplectic {

using Rational = mpq_class;
using Integer = mpz_class;
using RationalVector = std::vector<Rational>;

/// Parses "p", "p/q" or a plain decimal such as "-0.125" into an exact rational.
/// Throws std::invalid_argument on malformed input or a zero denominator.
Rational parse_rational(std::string_view text);

/// Canonical "p/q" form; integers print without a denominator.
std::string to_string(const Rational& value);

/// Exact binomial coefficient; returns 0 when k > n.
std::uint64_t binomial(int n, int k);

/// Rational square root when the argument is the square of a rational.
bool exact_sqrt(const Rational& value, Rational& root);

}  // namespace mplectic
