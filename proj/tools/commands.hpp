#pragma once

#include "mplectic/checks.hpp"
#include "mplectic/rational.hpp"

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace mplectic::cli {

enum ExitCode : int {
  kSuccess = 0,
  kVerificationFailed = 1,
  kUsageError = 2,
};

enum class Format { kCsv, kJson, kText };

struct RunConfig {
  int j_min = 1;
  int j_max = 5;
  RationalVector c_squared{Rational(10), Rational(1, 2), Rational(1, 2)};
  double x_min = 0.0;
  double x_max = 10.0;
  double step = 0.5;
  std::uint64_t seed = 1;
  std::string example;
  std::string suite;
  bool perturb = false;
  bool full_precision = false;
  Format format = Format::kCsv;
  std::optional<std::string> out;
};

/// Thrown for bad parameters; maps to kUsageError.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// "10,0.5,0.5" -> three positive exact rationals.
RationalVector parse_c_squared(const std::string& text);

/// Rounds half to even at four decimals and prints exactly four.
std::string format_4dp(double value);
/// Round-trip representation for full-precision output.
std::string format_full(double value);

struct TableRow {
  int j;
  double entropy;
  double disorder;
};

std::vector<TableRow> entropy_table(const RunConfig& config);
int cmd_entropy_table(const RunConfig& config, std::ostream& out);

/// Grid x_min, x_min + step, ... up to x_max (inclusive within 1e-9 * step).
std::vector<double> curve_grid(const RunConfig& config);
int cmd_entropy_curve(const RunConfig& config, std::ostream& out, std::ostream& err);

int cmd_verify_example(const RunConfig& config, std::ostream& out);

int cmd_check(const RunConfig& config, std::ostream& out);

}  // namespace mplectic::cli
