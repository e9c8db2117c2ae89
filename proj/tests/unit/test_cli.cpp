#include "commands.hpp"

#include <doctest.h>
#include <json.hpp>

#include <sstream>

using namespace mplectic;
using namespace mplectic::cli;

TEST_CASE("four-decimal rounding is half to even") {
  CHECK(format_4dp(0.68161) == "0.6816");
  CHECK(format_4dp(1.40404) == "1.4040");
  CHECK(format_4dp(0.00005) == "0.0000");
  // Exact binary ties: 312.5 and 937.5 ten-thousandths.
  CHECK(format_4dp(0.03125) == "0.0312");
  CHECK(format_4dp(0.09375) == "0.0938");
  CHECK(format_4dp(-1.25) == "-1.2500");
  CHECK(format_4dp(2) == "2.0000");
}

TEST_CASE("entropy table output") {
  RunConfig config;
  std::ostringstream out;
  CHECK(cmd_entropy_table(config, out) == kSuccess);
  CHECK(out.str() ==
        "j,entropy,disorder\n"
        "1,0.6816,0.4235\n"
        "2,0.9537,0.4901\n"
        "3,1.1924,0.5427\n"
        "4,1.4040,0.5855\n"
        "5,1.5934,0.6212\n");

  config.format = Format::kJson;
  config.j_max = 2;
  std::ostringstream js;
  CHECK(cmd_entropy_table(config, js) == kSuccess);
  const auto j = nlohmann::json::parse(js.str());
  CHECK(j["rows"].size() == 2);
  CHECK(j["c_squared"][1] == "1/2");

  config.j_max = 0;
  CHECK_THROWS_AS(entropy_table(config), UsageError);
}

TEST_CASE("c^2 parsing") {
  CHECK(parse_c_squared("10,0.5,1/2") == RationalVector{10, Rational(1, 2), Rational(1, 2)});
  CHECK_THROWS_AS(parse_c_squared("1,2"), UsageError);
  CHECK_THROWS_AS(parse_c_squared("1,0,2"), UsageError);
  CHECK_THROWS_AS(parse_c_squared("1,a,2"), UsageError);
}

TEST_CASE("curve output") {
  RunConfig config;
  config.x_max = 2;
  config.step = 0.5;
  CHECK(curve_grid(config) == std::vector<double>{0, 0.5, 1, 1.5, 2});
  std::ostringstream out, err;
  CHECK(cmd_entropy_curve(config, out, err) == kSuccess);
  CHECK(err.str().empty());
  CHECK(out.str().rfind("x,entropy,disorder\n0,0.36764947740", 0) == 0);
  config.step = 0;
  CHECK_THROWS_AS(curve_grid(config), UsageError);
  config.step = 1;
  config.x_min = -1;
  CHECK_THROWS_AS(curve_grid(config), UsageError);
}

TEST_CASE("verify-example") {
  RunConfig config;
  config.format = Format::kText;
  config.example = "cross3";
  std::ostringstream out;
  CHECK(cmd_verify_example(config, out) == kSuccess);
  CHECK(out.str().find("alpha_1 = x2 dx3") != std::string::npos);
  CHECK(out.str().ends_with("PASS\n"));

  config.perturb = true;
  std::ostringstream bad;
  CHECK(cmd_verify_example(config, bad) == kVerificationFailed);
  CHECK(bad.str().find("residual_1") != std::string::npos);

  config.perturb = false;
  config.example = "plectic6";
  config.format = Format::kJson;
  std::ostringstream js;
  CHECK(cmd_verify_example(config, js) == kSuccess);
  CHECK(nlohmann::json::parse(js.str())["passed"] == true);

  config.example = "sphere";
  CHECK_THROWS_AS(cmd_verify_example(config, js), UsageError);
}

TEST_CASE("check command") {
  RunConfig config;
  config.format = Format::kText;
  config.suite = "nondeg";
  std::ostringstream out;
  CHECK(cmd_check(config, out) == kSuccess);
  CHECK(out.str().find("PASS cross_product_decisions") != std::string::npos);
  config.suite = "bogus";
  CHECK_THROWS_AS(cmd_check(config, out), UsageError);
}

TEST_CASE("suites are reproducible for a seed") {
  RunConfig config;
  config.format = Format::kJson;
  config.suite = "operad";
  config.seed = 7;
  std::ostringstream a, b;
  cmd_check(config, a);
  cmd_check(config, b);
  CHECK(a.str() == b.str());
}
