#include "commands.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <map>

using namespace mplectic::cli;

namespace {

void add_output_options(CLI::App* cmd, RunConfig& config, std::string& format, const std::vector<std::string>& formats) {
  cmd->add_option("--format", format, "Output format")->check(CLI::IsMember(formats));
  cmd->add_option("--out", config.out, "Write output to this file instead of stdout");
}

Format parse_format(const std::string& name) {
  static const std::map<std::string, Format> formats{{"csv", Format::kCsv}, {"json", Format::kJson}, {"text", Format::kText}};
  return formats.at(name);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact computations with vector-valued multisymplectic forms"};
  app.require_subcommand(1);

  RunConfig config;
  std::string c2_text = "10,0.5,0.5";
  std::string format;

  auto* table = app.add_subcommand("entropy-table", "Entropy and disorder of the iterated cross-product stack");
  table->add_option("--j-min", config.j_min, "First iteration count")->capture_default_str();
  table->add_option("--j-max", config.j_max, "Last iteration count")->capture_default_str();
  table->add_option("--c2", c2_text, "Squared component values c1^2,c2^2,c3^2")->capture_default_str();
  table->add_flag("--full-precision", config.full_precision, "Print unrounded values");
  add_output_options(table, config, format, {"csv", "json"});

  auto* curve = app.add_subcommand("entropy-curve", "Sample the closed-form entropy and disorder curves as CSV");
  curve->add_option("--x-min", config.x_min, "First abscissa")->capture_default_str();
  curve->add_option("--x-max", config.x_max, "Last abscissa")->capture_default_str();
  curve->add_option("--step", config.step, "Grid spacing")->capture_default_str();
  add_output_options(curve, config, format, {"csv", "json"});

  auto* verify = app.add_subcommand("verify-example", "Check omega = f* Omega on a built-in example");
  verify->add_option("example", config.example, "cross3 or plectic6")->required();
  verify->add_flag("--perturb", config.perturb, "Break the given potential to exercise the failure path");
  add_output_options(verify, config, format, {"text", "json"});

  auto* check = app.add_subcommand("check", "Run a seeded property suite");
  check->add_option("suite", config.suite, "nondeg, operad, entropy or poincare")->required();
  check->add_option("--seed", config.seed, "Random seed")->capture_default_str();
  add_output_options(check, config, format, {"text", "json"});

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsageError;
  }

  try {
    if (format.empty()) format = (table->parsed() || curve->parsed()) ? "csv" : "text";
    config.format = parse_format(format);
    config.c_squared = parse_c_squared(c2_text);

    std::ofstream file;
    if (config.out) {
      file.open(*config.out, std::ios::binary);
      if (!file) throw UsageError("cannot open " + *config.out + " for writing");
    }
    std::ostream& out = config.out ? static_cast<std::ostream&>(file) : std::cout;

    if (table->parsed()) return cmd_entropy_table(config, out);
    if (curve->parsed()) return cmd_entropy_curve(config, out, std::cerr);
    if (verify->parsed()) return cmd_verify_example(config, out);
    return cmd_check(config, out);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsageError;
  }
}
