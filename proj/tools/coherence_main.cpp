// Copyright 2026 The cohlib Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "coh/audit.hpp"
#include "coh/errors.hpp"
#include "coh/io.hpp"
#include "coh/measures.hpp"
#include "coh/qubit.hpp"
#include "coh/rng.hpp"
#include "coh/scenarios.hpp"

namespace {

// Exit codes shared by every subcommand.
constexpr int kExitOk = 0;
constexpr int kExitViolationFound = 1;
constexpr int kExitInvalidInput = 2;
constexpr int kExitAlphaOutOfRange = 3;
constexpr int kExitNotIncoherent = 4;

enum class LogLevel { error = 0, info = 1, debug = 2 };

LogLevel log_level() {
  const char* env = std::getenv("COHERENCE_LOG");
  if (env == nullptr) return LogLevel::error;
  const std::string value(env);
  if (value == "debug") return LogLevel::debug;
  if (value == "info") return LogLevel::info;
  return LogLevel::error;
}

void log_info(const std::string& message) {
  if (log_level() >= LogLevel::info) std::cerr << "[info] " << message << "\n";
}

void log_debug(const std::string& message) {
  if (log_level() >= LogLevel::debug)
    std::cerr << "[debug] " << message << "\n";
}

struct Cli {
  // compute
  std::string state_path;
  std::string measure = "renyi";
  double alpha = 0.0;
  bool alpha_set = false;
  // check
  std::string channel_path;
  std::string condition;
  std::string alpha_grid_spec;
  // reproduce
  std::string scenario;
  std::string out_path;
  // audit
  std::size_t dim = 3;
  std::size_t trials = 100;
  std::uint64_t seed = 0;
  // shared
  std::string format = "json";
};

std::vector<double> requested_alphas(const Cli& cli) {
  if (!cli.alpha_grid_spec.empty()) {
    return coh::parse_grid_spec(cli.alpha_grid_spec);
  }
  if (!cli.alpha_set) {
    throw coh::Error("provide --alpha or --alpha-grid");
  }
  return {cli.alpha};
}

int run_compute(const Cli& cli) {
  const coh::DensityMatrix rho = coh::read_state_file(cli.state_path);
  log_info("computing " + cli.measure + " for state of dimension " +
           std::to_string(rho.dim()));

  coh::CoherenceReport report;
  if (cli.measure == "renyi") {
    if (!cli.alpha_set) throw coh::Error("--measure renyi needs --alpha");
    report = coh::renyi_coherence(rho, cli.alpha);
  } else if (cli.measure == "tsallis") {
    if (!cli.alpha_set) throw coh::Error("--measure tsallis needs --alpha");
    report = coh::tsallis_coherence(rho, cli.alpha);
  } else if (cli.measure == "relent") {
    report = coh::relative_entropy_coherence(rho);
  } else if (cli.measure == "c2_qubit") {
    if (rho.dim() != 2) {
      throw coh::Error("--measure c2_qubit needs a 2x2 state");
    }
    coh::QubitParams params;
    params.a = rho.matrix()(0, 0).real();
    params.b = rho.matrix()(1, 0);
    report.value = coh::qubit_c2(params);
    report.alpha = 2.0;
    report.method = coh::CoherenceMethod::closed_form;
    report.optimizer = coh::optimal_incoherent_state(rho, 2.0);
  } else {
    throw coh::Error("unknown measure \"" + cli.measure + "\"");
  }
  std::cout << coh::report_to_json(report) << "\n";
  return kExitOk;
}

int run_check(const Cli& cli) {
  const coh::DensityMatrix rho = coh::read_state_file(cli.state_path);
  const coh::KrausChannel channel = coh::read_channel_file(cli.channel_path);
  const std::vector<double> alphas = requested_alphas(cli);

  const bool csv = cli.format == "csv";
  if (csv) std::cout << coh::verdict_csv_header() << "\n";

  bool any_violation = false;
  for (double alpha : alphas) {
    coh::ConditionVerdict verdict;
    if (cli.condition == "c2a") {
      verdict = coh::check_c2a(rho, channel, alpha);
    } else if (cli.condition == "c2b") {
      verdict = coh::check_c2b(rho, channel, alpha);
    } else if (cli.condition == "extc2b") {
      verdict = coh::check_extended_c2b(rho, channel, alpha);
    } else {
      throw coh::Error("unknown condition \"" + cli.condition +
                       "\" (expected c2a, c2b, or extc2b)");
    }
    any_violation = any_violation || verdict.violated;
    std::cout << (csv ? coh::verdict_to_csv_row(verdict)
                      : coh::verdict_to_json(verdict))
              << "\n";
  }
  return any_violation ? kExitViolationFound : kExitOk;
}

int run_reproduce(const Cli& cli) {
  coh::SweepTable table;
  if (cli.scenario == "fig1") {
    const auto grid = cli.alpha_grid_spec.empty()
                          ? coh::default_alpha_sweep_grid()
                          : coh::parse_grid_spec(cli.alpha_grid_spec);
    table = coh::sweep_subselection(grid);
  } else if (cli.scenario == "fig2") {
    const auto grid = cli.alpha_grid_spec.empty()
                          ? coh::default_alpha_sweep_grid()
                          : coh::parse_grid_spec(cli.alpha_grid_spec);
    table = coh::sweep_block_additivity(grid);
  } else if (cli.scenario == "fig3") {
    const auto grid = cli.alpha_grid_spec.empty()
                          ? coh::default_population_grid()
                          : coh::parse_grid_spec(cli.alpha_grid_spec);
    table = coh::sweep_qubit_tradeoff(grid);
  } else if (cli.scenario == "extc2b") {
    const auto grid = cli.alpha_grid_spec.empty()
                          ? coh::default_interior_alpha_grid()
                          : coh::parse_grid_spec(cli.alpha_grid_spec);
    table = coh::sweep_weighted_subselection(grid);
  } else {
    throw coh::Error("unknown scenario \"" + cli.scenario +
                     "\" (expected fig1, fig2, fig3, or extc2b)");
  }
  log_debug("sweep produced " + std::to_string(table.rows.size()) + " rows");
  coh::atomic_write_file(cli.out_path, coh::sweep_to_csv(table));
  log_info("wrote " + cli.out_path);
  return kExitOk;
}

int run_audit(const Cli& cli) {
  if (cli.dim < 2 || cli.dim > 8) {
    throw coh::Error("--d must lie in [2, 8]");
  }
  coh::AuditOptions options;
  options.dim = cli.dim;
  options.trials = cli.trials;
  options.seed = cli.seed;
  if (!cli.alpha_grid_spec.empty()) {
    options.alpha_grid = coh::parse_grid_spec(cli.alpha_grid_spec);
  }

  const std::vector<coh::ConditionVerdict> verdicts =
      coh::audit_random(options);

  const bool csv = cli.format == "csv";
  std::string out;
  if (csv) out += coh::verdict_csv_header() + "\n";
  std::size_t violations = 0;
  std::map<std::string, double> counts;
  double worst_margin = 0.0;
  std::string worst_condition = "none";
  for (const coh::ConditionVerdict& verdict : verdicts) {
    out += csv ? coh::verdict_to_csv_row(verdict)
               : coh::verdict_to_json(verdict);
    out += "\n";
    counts["checked_" + coh::to_string(verdict.condition)] += 1.0;
    if (verdict.violated) {
      ++violations;
      counts["violated_" + coh::to_string(verdict.condition)] += 1.0;
      if (verdict.margin < worst_margin) {
        worst_margin = verdict.margin;
        worst_condition = coh::to_string(verdict.condition);
      }
    }
  }

  std::string summary = "{\"trials\": " + std::to_string(cli.trials);
  summary += ", \"dim\": " + std::to_string(cli.dim);
  summary += ", \"seed\": " + std::to_string(cli.seed);
  summary += ", \"rng\": \"" + std::string(coh::kRngAlgorithm) + "\"";
  summary += ", \"verdicts\": " + std::to_string(verdicts.size());
  summary += ", \"violations\": " + std::to_string(violations);
  summary += ", \"worst_margin\": " + coh::format_real(worst_margin);
  summary += ", \"worst_condition\": \"" + worst_condition + "\"";
  for (const auto& [key, value] : counts) {
    summary += ", \"" + key + "\": " + std::to_string(
        static_cast<long long>(value));
  }
  summary += "}";
  out += csv ? "# " + summary + "\n" : summary + "\n";

  if (cli.out_path.empty()) {
    std::cout << out;
  } else {
    coh::atomic_write_file(cli.out_path, out);
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Renyi coherence quantifiers, axiom audits, and sweeps"};
  app.require_subcommand(1);
  Cli cli;

  CLI::App* compute =
      app.add_subcommand("compute", "Evaluate a coherence quantifier");
  compute->add_option("--state", cli.state_path, "state JSON file")
      ->required();
  compute->add_option("--measure", cli.measure,
                      "renyi | tsallis | relent | c2_qubit");
  CLI::Option* alpha_opt =
      compute->add_option("--alpha", cli.alpha, "Renyi/Tsallis order");
  compute->add_option("--format", cli.format, "json");

  CLI::App* check =
      app.add_subcommand("check", "Audit one condition for a state/channel");
  check->add_option("--state", cli.state_path, "state JSON file")->required();
  check->add_option("--channel", cli.channel_path, "channel JSON file")
      ->required();
  check->add_option("--condition", cli.condition, "c2a | c2b | extc2b")
      ->required();
  CLI::Option* check_alpha =
      check->add_option("--alpha", cli.alpha, "single order");
  check->add_option("--alpha-grid", cli.alpha_grid_spec, "start:stop:step");
  check->add_option("--format", cli.format, "json | csv");

  CLI::App* reproduce =
      app.add_subcommand("reproduce", "Emit a scenario sweep as CSV");
  reproduce
      ->add_option("scenario", cli.scenario, "fig1 | fig2 | fig3 | extc2b")
      ->required();
  reproduce->add_option("--out", cli.out_path, "output CSV path")->required();
  reproduce->add_option("--alpha-grid", cli.alpha_grid_spec,
                        "start:stop:step (grid over a for fig3)");

  CLI::App* audit =
      app.add_subcommand("audit", "Random audit over states and channels");
  audit->add_option("--d", cli.dim, "dimension in [2,8]");
  audit->add_option("--trials", cli.trials, "number of sampled trials");
  audit->add_option("--seed", cli.seed, "64-bit seed");
  audit->add_option("--alpha-grid", cli.alpha_grid_spec, "start:stop:step");
  audit->add_option("--format", cli.format, "json | csv");
  audit->add_option("--out", cli.out_path, "write stream here instead of stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    app.exit(e);
    return kExitInvalidInput;
  }

  cli.alpha_set = alpha_opt->count() > 0 || check_alpha->count() > 0;

  try {
    if (compute->parsed()) return run_compute(cli);
    if (check->parsed()) return run_check(cli);
    if (reproduce->parsed()) return run_reproduce(cli);
    if (audit->parsed()) return run_audit(cli);
    return kExitInvalidInput;
  } catch (const coh::AlphaOutOfRangeError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitAlphaOutOfRange;
  } catch (const coh::NotIncoherentError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitNotIncoherent;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInvalidInput;
  }
}
