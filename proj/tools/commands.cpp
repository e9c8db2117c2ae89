#include "commands.hpp"

#include "mplectic/operad.hpp"
#include "mplectic/presets.hpp"
#include "mplectic/serialize.hpp"

#include <fmt/format.h>

#include <cmath>
#include <cstdlib>
#include <ostream>
#include <sstream>

namespace mplectic::cli {

RationalVector parse_c_squared(const std::string& text) {
  RationalVector values;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      values.push_back(parse_rational(item));
    } catch (const std::invalid_argument& e) {
      throw UsageError(std::string("--c2: ") + e.what());
    }
  }
  if (values.size() != 3) throw UsageError("--c2 expects three comma-separated values");
  for (const auto& v : values)
    if (v <= 0) throw UsageError("--c2 values must be positive");
  return values;
}

std::string format_4dp(double value) {
  // nearbyint honours the default round-to-nearest-even mode
  const double scaled = std::nearbyint(value * 1e4);
  const long long units = std::llabs(static_cast<long long>(scaled));
  const bool negative = scaled < 0;
  return fmt::format("{}{}.{:04d}", negative ? "-" : "", units / 10000, units % 10000);
}

std::string format_full(double value) { return fmt::format("{}", value); }

std::vector<TableRow> entropy_table(const RunConfig& config) {
  if (config.j_min < 0) throw UsageError("--j-min must be nonnegative");
  if (config.j_max < config.j_min) throw UsageError("--j-max must not be below --j-min");
  std::vector<TableRow> rows;
  for (int j = config.j_min; j <= config.j_max; ++j) {
    const auto ed = iterated_cross_entropy(j, config.c_squared);
    rows.push_back({j, ed.entropy, ed.disorder});
  }
  return rows;
}

int cmd_entropy_table(const RunConfig& config, std::ostream& out) {
  const auto rows = entropy_table(config);
  const auto number = [&](double v) { return config.full_precision ? format_full(v) : format_4dp(v); };
  if (config.format == Format::kJson) {
    Json table = Json::array();
    for (const auto& r : rows) table.push_back({{"j", r.j}, {"entropy", r.entropy}, {"disorder", r.disorder}});
    Json c2 = Json::array();
    for (const auto& c : config.c_squared) c2.push_back(to_string(c));
    out << Json{{"c_squared", c2}, {"rows", table}}.dump(2) << '\n';
    return kSuccess;
  }
  out << "j,entropy,disorder\n";
  for (const auto& r : rows) out << r.j << ',' << number(r.entropy) << ',' << number(r.disorder) << '\n';
  return kSuccess;
}

std::vector<double> curve_grid(const RunConfig& config) {
  if (!(config.step > 0)) throw UsageError("--step must be positive");
  if (config.x_max < config.x_min) throw UsageError("--x-max must not be below --x-min");
  if (!(config.x_min > -1.0)) throw UsageError("the curves are defined for x > -1");
  const auto count = static_cast<long long>(std::floor((config.x_max - config.x_min) / config.step + 1e-9)) + 1;
  std::vector<double> xs;
  xs.reserve(static_cast<std::size_t>(count));
  for (long long i = 0; i < count; ++i) xs.push_back(config.x_min + static_cast<double>(i) * config.step);
  return xs;
}

int cmd_entropy_curve(const RunConfig& config, std::ostream& out, std::ostream& err) {
  const auto xs = curve_grid(config);
  const auto samples = curve_samples(xs);

  // The curves are the c^2 = (10, 1/2, 1/2) table formula at real j.
  const RationalVector defaults{Rational(10), Rational(1, 2), Rational(1, 2)};
  int status = kSuccess;
  for (const auto& s : samples) {
    if (s.x < 0 || s.x != std::floor(s.x)) continue;
    const auto table = iterated_cross_entropy(static_cast<int>(s.x), defaults);
    if (std::abs(table.entropy - s.entropy) > 1e-12 || std::abs(table.disorder - s.disorder) > 1e-12) {
      err << fmt::format("curve disagrees with the table formula at x = {}: ({}, {}) vs ({}, {})\n", s.x, s.entropy,
                         s.disorder, table.entropy, table.disorder);
      status = kVerificationFailed;
    }
  }

  if (config.format == Format::kJson) {
    Json rows = Json::array();
    for (const auto& s : samples) rows.push_back({{"x", s.x}, {"entropy", s.entropy}, {"disorder", s.disorder}});
    out << rows.dump(2) << '\n';
  } else {
    out << "x,entropy,disorder\n";
    for (const auto& s : samples)
      out << format_full(s.x) << ',' << format_full(s.entropy) << ',' << format_full(s.disorder) << '\n';
  }
  return status;
}

namespace {

/// Adds x_{k+1} dx_1^...^dx_k to the first component, which changes d(alpha).
VectorPolyForm perturbed(const VectorPolyForm& alpha) {
  std::vector<PolyForm> comps = alpha.components();
  const int n = alpha.nvars();
  const int k = alpha.degree();
  std::vector<int> indices;
  for (int i = 1; i <= k; ++i) indices.push_back(i);
  comps.front() += PolyForm::term(MultiIndex(n, indices), Polynomial::variable(n, k + 1));
  return VectorPolyForm(std::move(comps));
}

}  // namespace

int cmd_verify_example(const RunConfig& config, std::ostream& out) {
  const PresentationPreset preset = [&] {
    try {
      return preset_by_name(config.example);
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
  }();
  const RationalVector center(static_cast<std::size_t>(preset.omega.nvars()), Rational(0));
  const VectorPolyForm given = config.perturb ? perturbed(preset.potential) : preset.potential;

  struct Run {
    std::string label;
    LocalPresentation record;
  };
  std::vector<Run> runs;
  runs.push_back({"given potential", verify_local_presentation(preset.omega, center, given)});
  runs.push_back({"radial potential", verify_local_presentation(preset.omega, center)});

  bool all = true;
  for (const auto& r : runs) all = all && r.record.verified();

  if (config.format == Format::kJson) {
    Json checks = Json::array();
    for (const auto& r : runs) checks.push_back({{"potential", r.label}, {"record", to_json(r.record)}});
    out << Json{{"example", config.example}, {"perturbed", config.perturb}, {"checks", checks}, {"passed", all}}.dump(2)
        << '\n';
    return all ? kSuccess : kVerificationFailed;
  }

  const auto& chart = runs.front().record.chart;
  out << fmt::format("example {}: n={} k={} m={}, chart dimension {}\n", config.example, chart.n(), chart.k(),
                     chart.m(), chart.total_dim());
  for (const auto& r : runs) {
    std::size_t terms = 0;
    for (const auto& c : r.record.residual.components()) terms += c.terms().size();
    out << fmt::format("{:<17} {}  residual terms: {}\n", r.label, r.record.verified() ? "PASS" : "FAIL", terms);
    for (std::size_t i = 1; i <= r.record.potential.arity(); ++i)
      out << fmt::format("  alpha_{} = {}\n", i, to_text(r.record.potential.component(i)));
    if (!r.record.verified())
      for (std::size_t i = 1; i <= r.record.residual.arity(); ++i)
        out << fmt::format("  residual_{} = {}\n", i, to_text(r.record.residual.component(i)));
    for (const auto& w : r.record.warnings) out << "  warning: " << w << '\n';
  }
  out << (all ? "PASS\n" : "FAIL\n");
  return all ? kSuccess : kVerificationFailed;
}

int cmd_check(const RunConfig& config, std::ostream& out) {
  const SuiteReport report = [&] {
    try {
      return run_suite(config.suite, config.seed);
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
  }();

  if (config.format == Format::kJson) {
    Json props = Json::array();
    for (const auto& p : report.properties) {
      Json entry{{"name", p.name}, {"trials", p.trials}, {"failures", p.failures}, {"passed", p.passed()}};
      if (!p.metric_name.empty()) entry[p.metric_name] = p.metric;
      props.push_back(std::move(entry));
    }
    out << Json{{"suite", report.suite}, {"seed", report.seed}, {"properties", props}, {"passed", report.passed()}}
               .dump(2)
        << '\n';
  } else {
    out << fmt::format("suite {} seed {}\n", report.suite, report.seed);
    for (const auto& p : report.properties) {
      out << fmt::format("{} {:<30} trials={:<5} failures={}", p.passed() ? "PASS" : "FAIL", p.name, p.trials,
                         p.failures);
      if (!p.metric_name.empty()) out << fmt::format(" {}={:.6e}", p.metric_name, p.metric);
      out << '\n';
    }
    out << (report.passed() ? "PASS\n" : "FAIL\n");
  }
  return report.passed() ? kSuccess : kVerificationFailed;
}

}  // namespace mplectic::cli
