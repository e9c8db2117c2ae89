#include "mplectic/deform.hpp"
#include "mplectic/presets.hpp"
#include "mplectic/random.hpp"

#include <doctest.h>

using namespace mplectic;

namespace {

Polynomial x(int nvars, int i) { return Polynomial::variable(nvars, i); }

}  // namespace

TEST_CASE("canonical chart coordinates") {
  const CanonicalChart c(3, 1, 3);
  CHECK(c.total_dim() == 12);
  CHECK(c.q(2) == 2);
  CHECK(c.p(MultiIndex(3, {1}), 1) == 4);
  CHECK(c.p(MultiIndex(3, {3}), 3) == 12);
  const CanonicalChart d(6, 2, 1);
  CHECK(d.total_dim() == 21);
  CHECK(d.p(MultiIndex(6, {1, 2}), 1) == 7);
  CHECK(d.p(MultiIndex(6, {5, 6}), 1) == 21);
  CHECK_THROWS_AS(CanonicalChart(1, 1, 1), std::invalid_argument);
  CHECK_THROWS_AS(CanonicalChart(3, 3, 1), std::invalid_argument);
  CHECK_THROWS_AS(CanonicalChart(3, 1, 0), std::invalid_argument);
  CHECK_THROWS(c.p(MultiIndex(3, {1, 2}), 1));
}

TEST_CASE("canonical forms") {
  const CanonicalChart c(2, 1, 2);
  const auto theta = canonical_theta(c);
  const auto omega = canonical_omega(c);
  REQUIRE(theta.arity() == 2);
  // Theta_2 = p_{1,2} dq1 + p_{2,2} dq2, with p_{1,2} = x5 and p_{2,2} = x6.
  PolyForm t2(6, 1);
  t2.add_term(MultiIndex(6, {1}), x(6, 5));
  t2.add_term(MultiIndex(6, {2}), x(6, 6));
  CHECK(theta.component(2) == t2);
  // Omega_2 = dp_{1,2}^dq1 + dp_{2,2}^dq2 = -dx1^dx5 - dx2^dx6.
  PolyForm o2(6, 2);
  o2.add_term(MultiIndex(6, {1, 5}), Polynomial::constant(6, -1));
  o2.add_term(MultiIndex(6, {2, 6}), Polynomial::constant(6, -1));
  CHECK(omega.component(2) == o2);
  CHECK(exterior_derivative(omega).is_zero());
  const RationalVector origin(6, Rational(0));
  CHECK(omega_nondegenerate_at(c, origin));
  CHECK_THROWS(omega_nondegenerate_at(c, RationalVector(5)));
}

TEST_CASE("radial potential of dq2^dq3") {
  const PolyForm w = PolyForm::from_const(ConstForm::basis(MultiIndex(3, {2, 3})));
  const RationalVector origin(3, Rational(0));
  PolyForm expected(3, 1);
  expected.add_term(MultiIndex(3, {3}), Rational(1, 2) * x(3, 2));
  expected.add_term(MultiIndex(3, {2}), Rational(-1, 2) * x(3, 3));
  CHECK(poincare_potential(w, origin) == expected);
  // About another center the potential differs but d of it does not.
  const RationalVector center{1, 2, -3};
  CHECK(exterior_derivative(poincare_potential(w, center)) == w);
}

TEST_CASE("radial potential inverts d on exact forms") {
  Rng rng(51);
  for (int trial = 0; trial < 40; ++trial) {
    const int n = 2 + trial % 5;
    const int d = trial % (n - 1);
    const PolyForm w = exterior_derivative(random_poly_form(rng, n, d));
    if (w.is_zero()) continue;
    const RationalVector center = random_vector(rng, n, 2);
    CHECK(exterior_derivative(poincare_potential(w, center)) == w);
  }
}

TEST_CASE("radial potential rejects non-closed forms") {
  const PolyForm w = PolyForm::term(MultiIndex(2, {2}), x(2, 1));
  const RationalVector origin(2, Rational(0));
  try {
    poincare_potential(w, origin);
    FAIL("expected NotClosed");
  } catch (const NotClosed& e) {
    CHECK(e.residue() == exterior_derivative(w));
  }
  CHECK_THROWS_AS(poincare_potential(PolyForm::function(x(2, 1)), origin), std::invalid_argument);
  CHECK_THROWS_AS(poincare_potential(exterior_derivative(w), RationalVector(3)), std::invalid_argument);
}

TEST_CASE("embedding of the cross-product example") {
  const auto preset = cross3_preset();
  const CanonicalChart chart(3, 1, 3);
  const PolyMap f = build_embedding(preset.potential, chart);
  REQUIRE(f.source() == 3);
  REQUIRE(f.target() == 12);
  for (int a = 1; a <= 3; ++a) CHECK(f.component(static_cast<std::size_t>(chart.q(a))) == x(3, a));
  // alpha = (q2 dq3, q3 dq1, q1 dq2)
  const auto p = [&](int index, int i) { return f.component(static_cast<std::size_t>(chart.p(MultiIndex(3, {index}), i))); };
  CHECK(p(3, 1) == x(3, 2));
  CHECK(p(1, 2) == x(3, 3));
  CHECK(p(2, 3) == x(3, 1));
  CHECK(p(1, 1).is_zero());
  CHECK(p(2, 1).is_zero());
  CHECK(p(3, 3).is_zero());
}

TEST_CASE("embedding of the R^6 example") {
  const auto preset = plectic6_preset();
  const CanonicalChart chart(6, 2, 1);
  const PolyMap f = build_embedding(preset.potential, chart);
  const auto p = [&](int a, int b) { return f.component(static_cast<std::size_t>(chart.p(MultiIndex(6, {a, b}), 1))); };
  CHECK(p(3, 5) == x(6, 1));
  CHECK(p(4, 6) == -x(6, 1));
  CHECK(p(3, 6) == -x(6, 2));
  CHECK(p(4, 5) == Rational(1, 2) * x(6, 2) * x(6, 2));
  int nonzero = 0;
  for (int c = 7; c <= 21; ++c) nonzero += !f.component(static_cast<std::size_t>(c)).is_zero();
  CHECK(nonzero == 4);
}

TEST_CASE("local presentations of the built-in examples") {
  for (const char* name : {"cross3", "plectic6"}) {
    const auto preset = preset_by_name(name);
    CHECK(exterior_derivative(preset.potential) == preset.omega);
    const RationalVector origin(static_cast<std::size_t>(preset.omega.nvars()), Rational(0));
    const LocalPresentation given = verify_local_presentation(preset.omega, origin, preset.potential);
    CHECK(given.verified());
    CHECK(given.pulled_back == preset.omega);
    CHECK(given.nondegenerate_at_center);
    CHECK(given.warnings.empty());
    const LocalPresentation radial = verify_local_presentation(preset.omega, origin);
    CHECK(radial.verified());
    CHECK(exterior_derivative(radial.potential) == preset.omega);
  }
  CHECK(verify_local_presentation(cross3_preset().omega, RationalVector{1, -2, 3}).verified());
  CHECK_THROWS_AS(preset_by_name("torus"), std::invalid_argument);
}

TEST_CASE("local presentation failure paths") {
  const auto preset = cross3_preset();
  const RationalVector origin(3, Rational(0));
  // A potential with the wrong derivative leaves a nonzero residual.
  std::vector<PolyForm> wrong = preset.potential.components();
  wrong[0] += PolyForm::term(MultiIndex(3, {1}), x(3, 2));
  const LocalPresentation bad = verify_local_presentation(preset.omega, origin, VectorPolyForm(wrong));
  CHECK_FALSE(bad.verified());
  CHECK(bad.residual == exterior_derivative(VectorPolyForm(wrong)) - preset.omega);

  // A form that is not closed is refused.
  const VectorPolyForm open({PolyForm::term(MultiIndex(3, {1, 2}), x(3, 3))});
  CHECK_THROWS_AS(verify_local_presentation(open, origin), NotClosed);

  // x1 dx1^dx2 is closed but degenerate at the origin: a warning, not a failure.
  const VectorPolyForm thin({PolyForm::term(MultiIndex(2, {1, 2}), x(2, 1))});
  const LocalPresentation warned = verify_local_presentation(thin, RationalVector(2, Rational(0)));
  CHECK(warned.verified());
  CHECK_FALSE(warned.nondegenerate_at_center);
  CHECK(warned.warnings.size() == 1);
  CHECK_THROWS_AS(verify_local_presentation(preset.omega, origin, thin), std::invalid_argument);
}

TEST_CASE("random local presentations") {
  Rng rng(52);
  int checked = 0;
  for (int trial = 0; trial < 30 && checked < 8; ++trial) {
    const int n = 2 + trial % 3;
    const int k = 1 + trial % (n - 1);
    std::vector<PolyForm> comps;
    for (int i = 0; i < 2; ++i) comps.push_back(exterior_derivative(random_poly_form(rng, n, k, 2)));
    if (comps[0].is_zero() || comps[1].is_zero()) continue;
    const VectorPolyForm omega(comps);
    const LocalPresentation r = verify_local_presentation(omega, random_vector(rng, n, 2));
    CHECK(r.verified());
    ++checked;
  }
  CHECK(checked > 0);
}
