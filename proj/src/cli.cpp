#include "symamp/cli.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <limits>
#include <ostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "symamp/coherent.hpp"
#include "symamp/optics.hpp"
#include "symamp/spectral.hpp"
#include "symamp/transform.hpp"

namespace symamp::cli {

namespace {

using Json = nlohmann::ordered_json;

// Reference values for the n=4, 2.0 -> 2.3 worked example, with
// the tolerances the reproduce command certifies against.
const std::vector<double> kReferenceLambdaSource = {0.976392, 0.971942,
                                                    1.02428, 1.02739};
const std::vector<double> kReferenceLambdaTarget = {1.00553, 0.991527,
                                                    0.99452, 1.00842};
constexpr double kReferencePUp = 0.980248;
constexpr double kReferencePLeakless = 0.977298;
constexpr double kReferencePLeaky = 0.978604;
constexpr double kSpectrumTol = 1e-5;
constexpr double kProbabilityTol = 1e-5;
constexpr double kLeakyTol = 2e-4;

double round_sig(double value, int digits) {
  if (!std::isfinite(value)) {
    return value;
  }
  char buffer[64];
  std::snprintf(buffer, sizeof(buffer), "%.*g", digits, value);
  return std::strtod(buffer, nullptr);
}

class DocBuilder {
 public:
  explicit DocBuilder(int precision) : precision_(precision) {}

  Json num(double value) const {
    if (!std::isfinite(value)) {
      return nullptr;
    }
    return round_sig(value, precision_);
  }

  Json nums(const std::vector<double>& values) const {
    Json arr = Json::array();
    for (double v : values) {
      arr.push_back(num(v));
    }
    return arr;
  }

  Json plan(const TransformPlan& p) const {
    Json block;
    block["p"] = num(p.p);
    block["mode"] = to_string(p.mode);
    block["shift"] = p.shift ? Json(*p.shift) : Json(nullptr);
    block["leak"] = nums(p.leak.values());
    block["redundancy"] =
        p.redundancy ? nums(p.redundancy->values()) : Json(nullptr);
    return block;
  }

  Json property_report(const PropertyReport& report) const {
    Json block;
    block["holds"] = report.holds;
    block["margin"] = num(report.margin);
    if (report.witness) {
      Json w;
      w["index"] = report.witness->index;
      w["parameters"] = nums(report.witness->parameters);
      block["witness"] = w;
    } else {
      block["witness"] = nullptr;
    }
    return block;
  }

 private:
  int precision_;
};

std::string csv_quote(const std::string& field) {
  if (field.find_first_of(",\"\n") == std::string::npos) {
    return field;
  }
  std::string quoted = "\"";
  for (char c : field) {
    if (c == '"') {
      quoted += '"';
    }
    quoted += c;
  }
  quoted += '"';
  return quoted;
}

std::string scalar_text(const Json& value) {
  if (value.is_string()) {
    return value.get<std::string>();
  }
  return value.dump();
}

void flatten(const Json& value, const std::string& path,
             std::vector<std::pair<std::string, std::string>>& rows) {
  if (value.is_object()) {
    for (const auto& [key, child] : value.items()) {
      flatten(child, path.empty() ? key : path + "." + key, rows);
    }
  } else if (value.is_array()) {
    for (size_t i = 0; i < value.size(); ++i) {
      flatten(value[i], path + "[" + std::to_string(i) + "]", rows);
    }
  } else {
    rows.emplace_back(path, scalar_text(value));
  }
}

void write_document(const Json& doc, OutputFormat format, std::ostream& out) {
  if (format == OutputFormat::kJson) {
    out << doc.dump(2) << "\n";
    return;
  }
  std::vector<std::pair<std::string, std::string>> rows;
  flatten(doc, "", rows);
  if (format == OutputFormat::kCsv) {
    out << "field,value\n";
    for (const auto& [key, value] : rows) {
      out << csv_quote(key) << "," << csv_quote(value) << "\n";
    }
    return;
  }
  size_t width = 0;
  for (const auto& [key, value] : rows) {
    width = std::max(width, key.size());
  }
  for (const auto& [key, value] : rows) {
    out << key << std::string(width - key.size() + 2, ' ') << value << "\n";
  }
}

std::vector<double> step_grid(double step, double upper, bool inclusive) {
  std::vector<double> grid;
  for (int k = 1;; ++k) {
    const double x = k * step;
    if (x > upper + (inclusive ? 1e-12 : -1e-12)) {
      break;
    }
    grid.push_back(std::min(x, upper));
  }
  return grid;
}

int run_spectrum(const RunConfig& config, std::ostream& out) {
  const SymmetricCoherentSet set(config.n, config.alpha);
  const Spectrum spectrum = spectrum_series(set);
  const DocBuilder doc(config.precision);
  Json report;
  report["command"] = "spectrum";
  report["n"] = config.n;
  report["alpha"] = doc.num(config.alpha);
  report["spectrum"] = doc.nums(spectrum.values());
  report["sum"] = doc.num(spectrum.sum());
  report["usd_success"] = doc.num(spectrum.min());
  write_document(report, config.format, out);
  return 0;
}

int run_bound(const RunConfig& config, std::ostream& out, std::ostream& err) {
  const AmplificationRequest req(config.n, config.alpha, *config.beta);
  if (config.alpha == 0.0) {
    err << "warning: zero source amplitude; identical states admit no "
           "perfect amplification, bound is 0\n";
  }
  const DocBuilder doc(config.precision);
  Json report;
  report["command"] = "bound";
  report["n"] = config.n;
  report["alpha"] = doc.num(config.alpha);
  report["beta"] = doc.num(*config.beta);
  report["gain"] = config.alpha > 0.0 ? doc.num(req.gain()) : Json(nullptr);
  report["d_source"] = doc.num(usd_success(req.source_set()));
  report["d_target"] = doc.num(usd_success(req.target_set()));
  report["p_up"] = doc.num(upper_bound(req));
  write_document(report, config.format, out);
  return 0;
}

int run_optimize(const RunConfig& config, std::ostream& out) {
  const AmplificationRequest req(config.n, config.alpha, *config.beta);
  const DocBuilder doc(config.precision);
  Json report;
  report["command"] = "optimize";
  report["n"] = config.n;
  report["alpha"] = doc.num(config.alpha);
  report["beta"] = doc.num(*config.beta);
  report["p_up"] = doc.num(upper_bound(req));
  if (config.mode != OptimizeMode::kLeaky) {
    const TransformPlan plan = leakless_optimum(req);
    report["p_leakless"] = doc.num(plan.p);
    report["leakless"] = doc.plan(plan);
  }
  if (config.mode != OptimizeMode::kLeakless) {
    const TransformPlan plan = leaky_optimum(req);
    report["p_leaky"] = doc.num(plan.p);
    report["leaky"] = doc.plan(plan);
  }
  write_document(report, config.format, out);
  return 0;
}

int run_verify(const RunConfig& config, std::ostream& out, std::ostream& err) {
  if (!(config.grid_step > 0.0) || config.grid_step >= 1.0) {
    err << "error: --grid-step must lie in (0, 1)\n";
    return 2;
  }
  const DocBuilder doc(config.precision);
  Json report;
  report["command"] = "verify";
  report["property"] = config.property;
  report["n"] = config.n;
  report["grid_step"] = doc.num(config.grid_step);

  if (config.property == "1") {
    const std::vector<double> grid = step_grid(config.grid_step, 1.0, true);
    report["points"] = grid.size();
    report["report"] = doc.property_report(check_property1(config.n, grid));
  } else if (config.property == "2") {
    const std::vector<double> grid = step_grid(config.grid_step, 1.0, false);
    std::vector<std::pair<double, double>> pairs;
    for (size_t i = 0; i < grid.size(); ++i) {
      for (size_t j = i + 1; j < grid.size(); ++j) {
        pairs.emplace_back(grid[i], grid[j]);
      }
    }
    report["points"] = pairs.size();
    report["report"] = doc.property_report(check_property2(config.n, pairs));
  } else if (config.property == "logconcave") {
    const std::vector<double> grid = step_grid(config.grid_step, 1.0, false);
    PropertyReport merged;
    merged.margin = std::numeric_limits<double>::infinity();
    for (int j = 1; j <= config.n - 1; ++j) {
      const PropertyReport partial = check_logconcavity(config.n, j, grid);
      merged.margin = std::min(merged.margin, partial.margin);
      if (!partial.holds && merged.holds) {
        merged.holds = false;
        merged.witness = partial.witness;
      }
    }
    report["points"] = grid.size();
    report["report"] = doc.property_report(merged);
  } else {
    err << "error: --property must be one of 1, 2, logconcave\n";
    return 2;
  }
  write_document(report, config.format, out);
  return 0;
}

int run_simulate(const RunConfig& config, std::ostream& out, std::ostream& err) {
  optics::Scenario scenario;
  scenario.n = config.n;
  scenario.alpha = config.alpha;
  scenario.efficiency = config.efficiency;
  if (config.scenario) {
    scenario.kind = optics::Scenario::parse_kind(*config.scenario);
  } else if (config.beta) {
    scenario.kind = optics::ScenarioKind::kAmplifyPipeline;
  } else {
    scenario.kind = config.n == 2 ? optics::ScenarioKind::kUsdTwo
                                  : optics::ScenarioKind::kUsdMultiport;
  }
  if (scenario.kind == optics::ScenarioKind::kUsdTwo && config.n != 2) {
    err << "error: --scenario usd-two requires --n 2\n";
    return 2;
  }
  if (scenario.kind == optics::ScenarioKind::kAmplifyPipeline) {
    if (!config.beta) {
      err << "error: --beta is required for the amplify scenario\n";
      return 2;
    }
    const AmplificationRequest req(config.n, config.alpha, *config.beta);
    scenario.gain = req.gain();
  }

  const optics::SimReport sim =
      optics::monte_carlo(scenario, *config.trials, config.seed);
  const DocBuilder doc(config.precision);
  Json report;
  report["command"] = "simulate";
  report["scenario"] = scenario.kind_name();
  report["n"] = scenario.n;
  report["alpha"] = doc.num(scenario.alpha);
  report["gain"] = doc.num(scenario.gain);
  report["efficiency"] = doc.num(scenario.efficiency);
  report["trials"] = sim.trials;
  report["seed"] = sim.seed;
  report["rng"] = sim.rng;
  report["success_count"] = sim.success_count;
  report["wrong_count"] = sim.wrong_count;
  report["inconclusive_count"] = sim.trials - sim.success_count - sim.wrong_count;
  report["empirical_rate"] = doc.num(sim.empirical_rate);
  report["ci_halfwidth"] = doc.num(sim.ci_halfwidth);
  report["analytic_success"] = doc.num(scenario.analytic_success());
  write_document(report, config.format, out);
  return 0;
}

int run_reproduce(const RunConfig& config, std::ostream& out) {
  const AmplificationRequest req(4, 2.0, 2.3);
  const Spectrum lambda_a = spectrum_series(req.source_set());
  const Spectrum lambda_b = spectrum_series(req.target_set());
  const double p_up = upper_bound(req);
  const TransformPlan leakless = leakless_optimum(req);
  const TransformPlan leaky = leaky_optimum(req);
  const Lemma1Report lemma1 = check_lemma1(req, 200, config.seed);

  const DocBuilder doc(config.precision);
  bool all_pass = true;
  const auto scalar_check = [&](double computed, double reference,
                                double tolerance) {
    const bool pass = std::abs(computed - reference) <=
                      tolerance * config.tolerance_scale;
    all_pass = all_pass && pass;
    Json block;
    block["computed"] = doc.num(computed);
    block["reference"] = doc.num(reference);
    block["tolerance"] = doc.num(tolerance * config.tolerance_scale);
    block["pass"] = pass;
    return block;
  };
  const auto vector_check = [&](const std::vector<double>& computed,
                                const std::vector<double>& reference,
                                double tolerance) {
    bool pass = true;
    for (size_t i = 0; i < reference.size(); ++i) {
      pass = pass && std::abs(computed[i] - reference[i]) <=
                         tolerance * config.tolerance_scale;
    }
    all_pass = all_pass && pass;
    Json block;
    block["computed"] = doc.nums(computed);
    block["reference"] = doc.nums(reference);
    block["tolerance"] = doc.num(tolerance * config.tolerance_scale);
    block["pass"] = pass;
    return block;
  };

  Json checks;
  checks["lambda_source"] =
      vector_check(lambda_a.values(), kReferenceLambdaSource, kSpectrumTol);
  checks["lambda_target"] =
      vector_check(lambda_b.values(), kReferenceLambdaTarget, kSpectrumTol);
  checks["p_up"] = scalar_check(p_up, kReferencePUp, kProbabilityTol);
  checks["p_leakless"] =
      scalar_check(leakless.p, kReferencePLeakless, kProbabilityTol);
  checks["p_leaky"] = scalar_check(leaky.p, kReferencePLeaky, kLeakyTol);

  Json lemma;
  lemma["min_unique"] = lemma1.min_unique;
  lemma["best_nontrivial_leaky_p"] = doc.num(lemma1.best_nontrivial_leaky_p);
  lemma["p_up"] = doc.num(lemma1.p_up);
  lemma["saturates"] = lemma1.saturates;
  const bool lemma_consistent = lemma1.min_unique && !lemma1.saturates;
  all_pass = all_pass && lemma_consistent;
  lemma["pass"] = lemma_consistent;

  Json report;
  report["command"] = "reproduce";
  report["n"] = 4;
  report["alpha"] = doc.num(2.0);
  report["beta"] = doc.num(2.3);
  report["tolerance_scale"] = doc.num(config.tolerance_scale);
  report["checks"] = checks;
  report["lemma1"] = lemma;
  report["all_pass"] = all_pass;
  write_document(report, config.format, out);
  return 0;
}

}  // namespace

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  try {
    switch (config.command) {
      case Command::kSpectrum:
        return run_spectrum(config, out);
      case Command::kBound:
        if (!config.beta) {
          err << "error: --beta is required for 'bound'\n";
          return 2;
        }
        return run_bound(config, out, err);
      case Command::kOptimize:
        if (!config.beta) {
          err << "error: --beta is required for 'optimize'\n";
          return 2;
        }
        return run_optimize(config, out);
      case Command::kVerify:
        return run_verify(config, out, err);
      case Command::kSimulate:
        if (!config.trials) {
          err << "error: --trials is required for 'simulate'\n";
          return 2;
        }
        return run_simulate(config, out, err);
      case Command::kReproduce:
        return run_reproduce(config, out);
    }
    err << "error: unknown command\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    err << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 3;
  }
}

int main(int argc, char** argv) {
  CLI::App app{
      "Optimal success probabilities, transform plans and linear-optics "
      "simulation for perfect amplification of symmetric coherent-state "
      "sets"};
  app.require_subcommand(1);

  RunConfig config;
  std::string format = "json";
  std::string mode = "both";

  const auto add_output_flags = [&](CLI::App* cmd) {
    cmd->add_option("--format", format, "Output format: json, csv or table")
        ->check(CLI::IsMember({"json", "csv", "table"}));
    cmd->add_option("--precision", config.precision,
                    "Significant digits in numeric output")
        ->check(CLI::Range(1, 17))
        ->envname("SYMAMP_PRECISION");
  };
  const auto add_seed_flag = [&](CLI::App* cmd) {
    cmd->add_option("--seed", config.seed, "RNG seed")
        ->envname("SYMAMP_SEED");
  };

  CLI::App* spectrum = app.add_subcommand(
      "spectrum", "Eigenvalues of the Gram matrix of a symmetric set");
  spectrum->add_option("--n", config.n, "Number of states")->required();
  spectrum->add_option("--alpha", config.alpha, "Amplitude")->required();
  add_output_flags(spectrum);

  CLI::App* bound = app.add_subcommand(
      "bound", "Upper bound d_A/d_B on amplification success");
  bound->add_option("--n", config.n, "Number of states")->required();
  bound->add_option("--alpha", config.alpha, "Source amplitude")->required();
  bound->add_option("--beta", config.beta, "Target amplitude")->required();
  add_output_flags(bound);

  CLI::App* optimize = app.add_subcommand(
      "optimize", "Optimal leakless and leaky transform plans");
  optimize->add_option("--n", config.n, "Number of states")->required();
  optimize->add_option("--alpha", config.alpha, "Source amplitude")->required();
  optimize->add_option("--beta", config.beta, "Target amplitude")->required();
  optimize->add_option("--mode", mode, "leakless, leaky or both")
      ->check(CLI::IsMember({"leakless", "leaky", "both"}));
  add_output_flags(optimize);

  CLI::App* verify = app.add_subcommand(
      "verify", "Grid checks of the spectral ordering/quotient properties");
  verify->add_option("--n", config.n, "Number of states")->required();
  verify->add_option("--property", config.property,
                     "Property to check: 1, 2 or logconcave")
      ->check(CLI::IsMember({"1", "2", "logconcave"}));
  verify->add_option("--grid-step", config.grid_step, "Grid step in (0, 1)");
  add_output_flags(verify);

  CLI::App* simulate = app.add_subcommand(
      "simulate", "Monte-Carlo run of a discrimination/amplification scenario");
  simulate->add_option("--n", config.n, "Number of states")->required();
  simulate->add_option("--alpha", config.alpha, "Amplitude")->required();
  simulate->add_option("--beta", config.beta,
                       "Target amplitude (selects the amplify scenario)");
  simulate->add_option("--trials", config.trials, "Number of trials")
      ->required();
  simulate->add_option("--scenario", config.scenario,
                       "usd-two, usd-multiport or amplify");
  simulate->add_option("--efficiency", config.efficiency,
                       "Detector efficiency in (0, 1]");
  add_seed_flag(simulate);
  add_output_flags(simulate);

  CLI::App* reproduce = app.add_subcommand(
      "reproduce", "Recompute the 4-state worked example and "
                   "certify against reference values");
  reproduce->add_option("--tolerance-scale", config.tolerance_scale,
                        "Scale factor on the certification tolerances");
  add_seed_flag(reproduce);
  add_output_flags(reproduce);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }

  if (spectrum->parsed()) config.command = Command::kSpectrum;
  if (bound->parsed()) config.command = Command::kBound;
  if (optimize->parsed()) config.command = Command::kOptimize;
  if (verify->parsed()) config.command = Command::kVerify;
  if (simulate->parsed()) config.command = Command::kSimulate;
  if (reproduce->parsed()) config.command = Command::kReproduce;

  if (format == "csv") config.format = OutputFormat::kCsv;
  if (format == "table") config.format = OutputFormat::kTable;
  if (mode == "leakless") config.mode = OptimizeMode::kLeakless;
  if (mode == "leaky") config.mode = OptimizeMode::kLeaky;

  return run(config, std::cout, std::cerr);
}

}  // namespace symamp::cli
