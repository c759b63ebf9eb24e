// ndf-lab: experiment runner for negative definite function checks.
//
//   ndf-lab <command> --config <file> [--out <file>] [--seed <u64>] [--samples <N>]
//   ndf-lab --schema
//
// Exit codes: 0 all checks passed, 1 a mathematical check failed, 2 usage or config error.

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "ndf/experiment.hpp"
#include "ndf/parallel.hpp"
#include "ndf/rng.hpp"

namespace {

int usage_error(const std::string& message) {
  std::cerr << "ndf-lab: " << message << "\n";
  return ndf::experiment::kUsageError;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Numerical checks for continuous negative definite functions"};
  app.name("ndf-lab");
  std::string command;
  std::string config_path;
  std::string out_path;
  std::string seed_text;
  std::uint64_t samples = 0;
  bool print_schema = false;

  app.add_option("command", command,
                 "verify-inequality | check-kernel | variance-identity | counterexample | "
                 "tail-identity | simulate-bbm | signed-sum");
  app.add_option("--config", config_path, "experiment config (JSON)");
  app.add_option("--out", out_path, "CSV output file");
  app.add_option("--seed", seed_text, "override the seed (decimal or 0x-hex)");
  app.add_option("--samples", samples, "override N (or n_paths for simulate-bbm)")->check(CLI::PositiveNumber);
  app.add_flag("--schema", print_schema, "print the config JSON schema and exit");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return ndf::experiment::kUsageError;
  }

  if (print_schema) {
    std::cout << ndf::experiment::kConfigSchema;
    return 0;
  }
  if (command.empty()) return usage_error("missing command");
  if (config_path.empty()) return usage_error("missing --config");

  nlohmann::json config;
  {
    std::ifstream in(config_path);
    if (!in) return usage_error("cannot open config '" + config_path + "'");
    try {
      config = nlohmann::json::parse(in);
    } catch (const nlohmann::json::parse_error& e) {
      return usage_error(config_path + ": malformed JSON: " + e.what());
    }
  }
  if (!config.is_object()) return usage_error(config_path + ": $: config must be a JSON object");
  if (!config.contains("command")) {
    config["command"] = command;
  } else if (config["command"] != command) {
    return usage_error(config_path + ": $.command: config is for '" + config["command"].dump() +
                       "' but '" + command + "' was requested");
  }

  ndf::experiment::Overrides overrides;
  overrides.threads = ndf::threads_from_env();
  if (!seed_text.empty()) {
    try {
      overrides.seed = ndf::parse_seed(seed_text);
    } catch (const std::invalid_argument& e) {
      return usage_error(std::string("--seed: ") + e.what());
    }
  }
  if (samples > 0) overrides.samples = samples;

  ndf::experiment::Report report;
  try {
    report = ndf::experiment::run(config, overrides);
  } catch (const std::exception& e) {
    return usage_error(config_path + ": " + e.what());
  }

  if (!out_path.empty()) {
    std::ofstream out(out_path, std::ios::binary);
    if (!out) return usage_error("cannot write '" + out_path + "'");
    report.table.write(out);
    out.flush();
    if (!out) return usage_error("failed writing '" + out_path + "'");
  }
  std::cout << report.document.dump(2) << "\n";
  return report.exit_code;
}
