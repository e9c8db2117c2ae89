#pragma once

// Brute-force reference computations used only by the tests. They work from
// definitions (Leibniz sums, shuffle sums, plain enumeration) and share no
// code with the library beyond the number type.

#include "mplectic/rational.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <numeric>
#include <vector>

namespace oracle {

using mplectic::Rational;
using mplectic::RationalVector;

/// Sign of a permutation given as a list of distinct integers, by counting inversions.
inline int sign_of(const std::vector<int>& p) {
  int inversions = 0;
  for (std::size_t a = 0; a < p.size(); ++a)
    for (std::size_t b = a + 1; b < p.size(); ++b)
      if (p[a] > p[b]) ++inversions;
  return inversions % 2 == 0 ? 1 : -1;
}

/// Leibniz determinant of a square matrix given as rows.
inline Rational leibniz_det(const std::vector<RationalVector>& m) {
  const int n = static_cast<int>(m.size());
  std::vector<int> p(static_cast<std::size_t>(n));
  std::iota(p.begin(), p.end(), 0);
  Rational total = 0;
  do {
    Rational term = sign_of(p);
    for (int r = 0; r < n; ++r) term *= m[static_cast<std::size_t>(r)][static_cast<std::size_t>(p[static_cast<std::size_t>(r)])];
    total += term;
  } while (std::next_permutation(p.begin(), p.end()));
  return total;
}

/// All strictly increasing d-tuples from {1..n} in lexicographic order, by
/// counting through every d-tuple and keeping the increasing ones.
inline std::vector<std::vector<int>> increasing_tuples(int n, int d) {
  std::vector<std::vector<int>> out;
  std::vector<int> t(static_cast<std::size_t>(d), 1);
  if (d == 0) return {{}};
  for (;;) {
    if (std::is_sorted(t.begin(), t.end()) && std::adjacent_find(t.begin(), t.end()) == t.end()) out.push_back(t);
    int pos = d - 1;
    while (pos >= 0 && t[static_cast<std::size_t>(pos)] == n) t[static_cast<std::size_t>(pos--)] = 1;
    if (pos < 0) break;
    ++t[static_cast<std::size_t>(pos)];
  }
  return out;
}

/// Shannon entropy in nats of the distribution proportional to the given positive weights.
inline double entropy_of(const std::vector<double>& weights) {
  double total = 0;
  for (double w : weights) total += w;
  double e = 0;
  for (double w : weights) e -= (w / total) * std::log(w / total);
  return e;
}

/// Squared component values of the cross-product form composed with itself j
/// times through slot 1: the first three values, then j copies of the last two.
inline std::vector<double> iterated_cross_squares(int j, double c1, double c2, double c3) {
  std::vector<double> out{c1, c2, c3};
  for (int r = 0; r < j; ++r) {
    out.push_back(c2);
    out.push_back(c3);
  }
  return out;
}

}  // namespace oracle
