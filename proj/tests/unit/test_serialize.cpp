#include "mplectic/presets.hpp"
#include "mplectic/random.hpp"
#include "mplectic/serialize.hpp"

#include <doctest.h>

using namespace mplectic;

TEST_CASE("text rendering") {
  const Polynomial p = Rational(1, 2) * Polynomial::variable(2, 2) * Polynomial::variable(2, 2);
  CHECK(to_text(p) == "1/2*x2^2");
  CHECK(to_text(Polynomial(2)) == "0");
  CHECK(to_text(plectic6_preset().potential.component(1)) ==
        "x1 dx3^dx5 - x2 dx3^dx6 + 1/2*x2^2 dx4^dx5 - x1 dx4^dx6");
  CHECK(to_text(PolyForm(3, 2)) == "0");
}

TEST_CASE("JSON layout") {
  const ConstForm f = ConstForm::basis(MultiIndex(3, {1, 3}), Rational(-2, 3));
  const Json j = to_json(f);
  CHECK(j["dim"] == 3);
  CHECK(j["degree"] == 2);
  REQUIRE(j["terms"].size() == 1);
  CHECK(j["terms"][0]["indices"] == Json::array({1, 3}));
  CHECK(j["terms"][0]["coeff"] == "-2/3");
  const Json r = to_json(entropy_from_squares({1, 1, 2}));
  CHECK(r["arity"] == 3);
  CHECK(r.contains("entropy_nats"));
  CHECK(r.contains("disorder"));
}

TEST_CASE("JSON round trips") {
  Rng rng(61);
  for (int trial = 0; trial < 20; ++trial) {
    const int n = 2 + trial % 3;
    const ConstForm f = random_const_form(rng, n, 1 + trial % n);
    CHECK(const_form_from_json(to_json(f)) == f);
    const OperadElement w = random_operad_element(rng, n, 1, 2);
    CHECK(vector_form_from_json(to_json(w.form())) == w.form());
    const Polynomial p = random_polynomial(rng, n, 3);
    CHECK(polynomial_from_json(to_json(p), n) == p);
    const PolyForm g = random_poly_form(rng, n, 1 + trial % n);
    CHECK(poly_form_from_json(to_json(g)) == g);
    const VectorPolyForm v({g, g});
    CHECK(vector_poly_form_from_json(to_json(v)) == v);
    const PolyMap m = random_poly_map(rng, n, 3);
    CHECK(poly_map_from_json(to_json(m)) == m);
  }
}

TEST_CASE("local presentation record") {
  const auto preset = cross3_preset();
  const RationalVector origin(3, Rational(0));
  const Json j = to_json(verify_local_presentation(preset.omega, origin, preset.potential));
  CHECK(j["verified"] == true);
  CHECK(j["chart"]["total_dim"] == 12);
}

TEST_CASE("schema violations are rejected") {
  CHECK_THROWS_AS(const_form_from_json(Json::parse(R"({"dim": 3})")), std::invalid_argument);
  CHECK_THROWS_AS(const_form_from_json(Json::parse(R"({"dim": 3, "degree": 2, "terms": [{"indices": [2, 1], "coeff": "1"}]})")),
                  std::invalid_argument);
  CHECK_THROWS_AS(const_form_from_json(Json::parse(R"({"dim": 3, "degree": 2, "terms": [{"indices": [1, 2], "coeff": "x"}]})")),
                  std::invalid_argument);
  CHECK_THROWS_AS(const_form_from_json(Json::parse(R"({"dim": 3, "degree": 1, "terms": [{"indices": [1, 2], "coeff": "1"}]})")),
                  std::invalid_argument);
  CHECK_THROWS_AS(polynomial_from_json(Json::parse(R"([{"exps": [1, 2, 3], "coeff": "1"}])"), 2), std::invalid_argument);
  CHECK_THROWS_AS(vector_form_from_json(Json::parse(R"({"dim": 3, "k": 1, "components": []})")), std::invalid_argument);
}
