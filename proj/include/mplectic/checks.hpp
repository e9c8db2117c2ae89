#pragma once

// Seeded property suites. Each property draws from its own generator derived
// from (seed, property number), so reports are reproducible byte for byte.

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace mplectic {

struct PropertyResult {
  explicit PropertyResult(std::string name_, std::string metric_name_ = {}, double metric_ = 0.0)
      : name(std::move(name_)), metric_name(std::move(metric_name_)), metric(metric_) {}

  std::string name;
  std::size_t trials = 0;
  std::size_t failures = 0;
  std::string metric_name;  // e.g. "min_slack"; empty when there is nothing to report
  double metric = 0.0;

  bool passed() const { return failures == 0 && trials > 0; }
};

struct SuiteReport {
  std::string suite;
  std::uint64_t seed = 0;
  std::vector<PropertyResult> properties;

  bool passed() const;
  const PropertyResult& property(std::string_view name) const;
};

SuiteReport run_nondeg_suite(std::uint64_t seed);
SuiteReport run_operad_suite(std::uint64_t seed);
SuiteReport run_entropy_suite(std::uint64_t seed);
SuiteReport run_poincare_suite(std::uint64_t seed);

/// Dispatches on "nondeg", "operad", "entropy" or "poincare".
/// Throws std::invalid_argument for any other name.
SuiteReport run_suite(std::string_view name, std::uint64_t seed);

const std::vector<std::string>& suite_names();

}  // namespace mplectic
