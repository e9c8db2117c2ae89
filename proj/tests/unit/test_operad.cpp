#include "oracles.hpp"

#include "mplectic/operad.hpp"
#include "mplectic/random.hpp"

#include <doctest.h>

#include <cmath>

using namespace mplectic;

namespace {

/// Component list of beta o_i alpha written out directly.
std::vector<ConstForm> spliced(const OperadElement& beta, std::size_t i, const OperadElement& alpha) {
  std::vector<ConstForm> out;
  for (std::size_t j = 1; j < i; ++j) out.push_back(beta.component(j));
  for (const auto& c : alpha.form().components()) out.push_back(c);
  for (std::size_t j = i + 1; j <= beta.arity(); ++j) out.push_back(beta.component(j));
  return out;
}

const std::vector<RationalVector> kArgs{{1, 2, 3}, {4, 5, 6}};

}  // namespace

TEST_CASE("operad elements reject degenerate or unary forms") {
  const VectorValuedForm cross = cross_product_form();
  CHECK_NOTHROW(OperadElement{cross});
  CHECK_THROWS_AS(OperadElement{VectorValuedForm({cross.component(1)})}, std::invalid_argument);
  CHECK_THROWS_AS(OperadElement{VectorValuedForm({cross.component(1), cross.component(1)})}, std::invalid_argument);
}

TEST_CASE("partial composition splices components in place") {
  Rng rng(31);
  for (int trial = 0; trial < 40; ++trial) {
    const int n = 3 + trial % 2;
    const int k = 1 + trial % (n - 1);
    const OperadElement beta = random_operad_element(rng, n, k, 2 + static_cast<std::size_t>(trial % 3));
    const OperadElement alpha = random_operad_element(rng, n, k, 2 + static_cast<std::size_t>(trial % 2));
    for (std::size_t i = 1; i <= beta.arity(); ++i) {
      const OperadElement c = compose_at(beta, i, alpha);
      CHECK(c.form().components() == spliced(beta, i, alpha));
      CHECK(c.arity() == beta.arity() + alpha.arity() - 1);
    }
  }
  const OperadElement w(cross_product_form());
  CHECK_THROWS_AS(compose_at(w, 0, w), std::out_of_range);
  CHECK_THROWS_AS(compose_at(w, 4, w), std::out_of_range);
  Rng other(32);
  const OperadElement wide = random_operad_element(other, 4, 1, 2);
  CHECK_THROWS_AS(compose_at(w, 1, wide), std::invalid_argument);
}

TEST_CASE("permutations") {
  const Permutation s({2, 3, 1});
  CHECK(s(1) == 2);
  CHECK(s.inverse()(2) == 1);
  CHECK(s * s.inverse() == Permutation::identity(3));
  const Permutation t = Permutation::transposition(3, 1, 3);
  // (s * t)(j) = s(t(j))
  for (std::size_t j = 1; j <= 3; ++j) CHECK((s * t)(j) == s(t(j)));
  CHECK_THROWS(Permutation({1, 1, 2}));
  CHECK_THROWS(Permutation({0, 1}));
  CHECK_THROWS(Permutation({1, 3}));
}

TEST_CASE("right action reindexes components") {
  const OperadElement w(cross_product_form());
  const Permutation s({3, 1, 2});
  const OperadElement ws = act(s, w);
  for (std::size_t j = 1; j <= 3; ++j) CHECK(ws.component(j) == w.component(s(j)));
  Rng rng(33);
  for (int trial = 0; trial < 30; ++trial) {
    const OperadElement x = random_operad_element(rng, 3, 1, 4);
    const Permutation a = random_permutation(rng, 4);
    const Permutation b = random_permutation(rng, 4);
    CHECK(act(a * b, x) == act(b, act(a, x)));
    CHECK(act(Permutation::identity(4), x) == x);
  }
  CHECK_THROWS(act(Permutation::identity(2), w));
}

TEST_CASE("block and embedded promotions") {
  const Permutation swap = Permutation::transposition(2, 1, 2);
  const std::vector<std::size_t> blocks{2, 3};
  // Block {1,2} moves behind block {3,4,5}.
  CHECK(block_promote(swap, blocks).images() == std::vector<std::size_t>{4, 5, 1, 2, 3});
  CHECK(embed_promote(swap, 2, 4) == Permutation::transposition(4, 2, 3));
  const std::vector<std::size_t> ones{1, 1, 1};
  const Permutation s({2, 3, 1});
  CHECK(block_promote(s, ones) == s);
  CHECK(embed_promote(s, 1, 3) == s);
}

TEST_CASE("equivariance identities on a concrete pair") {
  Rng rng(34);
  const OperadElement beta = random_operad_element(rng, 3, 1, 3);
  const OperadElement alpha = random_operad_element(rng, 3, 1, 2);
  const Permutation sigma({3, 1, 2});
  const Permutation tau = Permutation::transposition(2, 1, 2);
  for (std::size_t i = 1; i <= 3; ++i) {
    CHECK(compose_at(beta, i, act(tau, alpha)) == act(embed_promote(tau, i, 4), compose_at(beta, i, alpha)));
    std::vector<std::size_t> blocks(3, 1);
    blocks[i - 1] = 2;
    CHECK(compose_at(act(sigma, beta), i, alpha) ==
          act(block_promote(sigma, blocks), compose_at(beta, sigma(i), alpha)));
  }
}

TEST_CASE("entropy of explicit squared values") {
  const auto r = entropy_from_squares({1, 1, 2});
  CHECK(r.entropy == doctest::Approx(1.5 * std::log(2.0)).epsilon(1e-14));
  CHECK(r.disorder == doctest::Approx(1.5 * std::log(2.0) / std::log(3.0)).epsilon(1e-14));
  CHECK(r.weights == std::vector<double>{0.25, 0.25, 0.5});

  const OperadElement w(cross_product_form());
  const auto e = entropy(w, kArgs);
  CHECK(e.values == RationalVector{-3, 6, -3});
  CHECK(e.entropy == doctest::Approx(oracle::entropy_of({9, 36, 9})).epsilon(1e-14));
  const std::vector<RationalVector> flat{{1, 0, 0}, {0, 1, 0}};
  try {
    entropy(w, flat);
    FAIL("expected ZeroComponent");
  } catch (const ZeroComponent& z) {
    CHECK(z.component() == 1);
  }
}

TEST_CASE("doubling bound and chain rule on the cross product") {
  const OperadElement w(cross_product_form());
  for (std::size_t i = 1; i <= 3; ++i) {
    const BoundCheck b = check_entropy_doubling(w, i, kArgs);
    CHECK(b.holds);
    CHECK(b.slack >= 0);
  }
  // B = (9, 36, 9), A = 54: sqrt(1/6) is irrational, so it stays a radicand.
  const ScaledElement alpha = normalize_for_chain(w, w, 1, kArgs);
  CHECK(alpha.radicand == Rational(1, 6));
  const ChainCheck c = check_entropy_chain(w, 1, alpha, kArgs);
  CHECK(c.holds);
  const double composed = oracle::entropy_of({1.5, 6, 1.5, 36, 9});
  CHECK(c.composed == doctest::Approx(composed).epsilon(1e-13));
  CHECK(composed == doctest::Approx(oracle::entropy_of({9, 36, 9}) * (1 + 1.0 / 6)).epsilon(1e-13));
  // u = (1,1,0), v = (0,1,2) gives squares (4, 4, 1) with A = 9, so B_1 / A = 4/9 has root 2/3.
  const std::vector<RationalVector> square_args{{1, 1, 0}, {0, 1, 2}};
  const ScaledElement exact = normalize_for_chain(w, w, 1, square_args);
  CHECK(exact.radicand == 1);
  CHECK(exact.form == OperadElement(cross_product_form().scaled(Rational(2, 3))));
  const ChainCheck e = check_entropy_chain(w, 1, exact, square_args);
  CHECK(e.holds);
  CHECK(e.composed == doctest::Approx(oracle::entropy_of({16.0 / 9, 16.0 / 9, 4.0 / 9, 4, 1})).epsilon(1e-13));
  CHECK_THROWS_AS(check_entropy_chain(w, 1, w, kArgs), HypothesisViolated);
}

TEST_CASE("iterated cross-product stack") {
  for (int j = 0; j <= 4; ++j) {
    const OperadElement stack = iterated_cross_stack(j);
    CHECK(stack.arity() == static_cast<std::size_t>(3 + 2 * j));
    // u = (1,2,3), v = (4,5,6) gives squares (9, 36, 9).
    const auto from_vectors = iterated_cross_entropy(j, kArgs[0], kArgs[1]);
    const auto from_squares = iterated_cross_entropy(j, RationalVector{9, 36, 9});
    const auto expected = oracle::iterated_cross_squares(j, 9, 36, 9);
    CHECK(from_vectors.entropy == doctest::Approx(oracle::entropy_of(expected)).epsilon(1e-13));
    CHECK(from_squares.entropy == doctest::Approx(oracle::entropy_of(expected)).epsilon(1e-13));
    CHECK(from_squares.disorder ==
          doctest::Approx(oracle::entropy_of(expected) / std::log(3.0 + 2 * j)).epsilon(1e-13));
  }
}

TEST_CASE("entropy table against the reference values") {
  // Reference four-decimal table for c^2 = (10, 1/2, 1/2).
  const double reference[5][2] = {
      {0.6816, 0.4235}, {0.9537, 0.4901}, {1.1924, 0.5427}, {1.4040, 0.5855}, {1.5934, 0.6212}};
  const RationalVector c2{10, Rational(1, 2), Rational(1, 2)};
  for (int j = 1; j <= 5; ++j) {
    const auto ed = iterated_cross_entropy(j, c2);
    CHECK(std::abs(ed.entropy - reference[j - 1][0]) <= 5e-5);
    CHECK(std::abs(ed.disorder - reference[j - 1][1]) <= 5e-5);
    const auto expected = oracle::iterated_cross_squares(j, 10, 0.5, 0.5);
    CHECK(ed.entropy == doctest::Approx(oracle::entropy_of(expected)).epsilon(1e-13));
  }
}

TEST_CASE("closed-form curves") {
  // At x = 0 the weights are 10/11, 1/22, 1/22.
  const double e0 = (10 * std::log(1.1) + std::log(22.0)) / 11;
  const CurveSample s0 = curve_sample(0);
  CHECK(s0.entropy == doctest::Approx(e0).epsilon(1e-14));
  CHECK(s0.entropy == doctest::Approx(0.3676494774).epsilon(1e-10));
  CHECK(s0.disorder == doctest::Approx(e0 / std::log(3.0)).epsilon(1e-14));
  for (int j = 1; j <= 8; ++j) {
    const auto expected = oracle::iterated_cross_squares(j, 10, 0.5, 0.5);
    const CurveSample s = curve_sample(j);
    CHECK(std::abs(s.entropy - oracle::entropy_of(expected)) <= 1e-12);
    CHECK(std::abs(s.disorder - oracle::entropy_of(expected) / std::log(3.0 + 2 * j)) <= 1e-12);
  }
  // Between integers the curves interpolate monotonically.
  CHECK(curve_sample(1.5).entropy > curve_sample(1).entropy);
  CHECK(curve_sample(1.5).entropy < curve_sample(2).entropy);
  CHECK_THROWS_AS(curve_sample(-1), std::domain_error);
  CHECK_NOTHROW(curve_sample(-0.5));
  const std::vector<double> xs{0, 1, 2};
  CHECK(curve_samples(xs).size() == 3);
}
