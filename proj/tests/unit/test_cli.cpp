#include <cmath>
#include <sstream>
#include <string>

#include <doctest.h>
#include <json.hpp>

#include "symamp/cli.hpp"

using namespace symamp::cli;
using Json = nlohmann::json;

namespace {

struct RunResult {
  int exit_code;
  std::string out;
  std::string err;
};

RunResult run_config(const RunConfig& config) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = run(config, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("optimize emits the worked-example probabilities") {
  RunConfig config;
  config.command = Command::kOptimize;
  config.n = 4;
  config.alpha = 2.0;
  config.beta = 2.3;
  config.mode = OptimizeMode::kBoth;
  const RunResult result = run_config(config);
  REQUIRE(result.exit_code == 0);
  const Json doc = Json::parse(result.out);
  CHECK(std::abs(doc["p_up"].get<double>() - 0.980248) < 1e-5);
  CHECK(std::abs(doc["p_leakless"].get<double>() - 0.977298) < 1e-5);
  CHECK(std::abs(doc["p_leaky"].get<double>() - 0.978604) < 2e-4);
  CHECK(doc["leakless"]["shift"] == 3);
  CHECK(doc["leaky"]["mode"] == "leaky");
}

TEST_CASE("spectrum command emits the reference eigenvalues") {
  RunConfig config;
  config.command = Command::kSpectrum;
  config.n = 4;
  config.alpha = 2.0;
  const RunResult result = run_config(config);
  REQUIRE(result.exit_code == 0);
  const Json doc = Json::parse(result.out);
  const std::vector<double> expected = {0.976392, 0.971942, 1.02428, 1.02739};
  for (int j = 0; j < 4; ++j) {
    CHECK(std::abs(doc["spectrum"][j].get<double>() -
                   expected[static_cast<size_t>(j)]) < 1e-5);
  }
}

TEST_CASE("bound at identical amplitudes is exactly one") {
  RunConfig config;
  config.command = Command::kBound;
  config.n = 3;
  config.alpha = 0.5;
  config.beta = 0.5;
  const RunResult result = run_config(config);
  REQUIRE(result.exit_code == 0);
  const Json doc = Json::parse(result.out);
  CHECK(doc["p_up"].get<double>() == 1.0);
}

TEST_CASE("validation failures exit with code 2 naming the flag") {
  RunConfig config;
  config.command = Command::kBound;
  config.n = 3;
  config.alpha = 0.5;
  const RunResult missing_beta = run_config(config);
  CHECK(missing_beta.exit_code == 2);
  CHECK(missing_beta.err.find("--beta") != std::string::npos);

  config.command = Command::kSimulate;
  const RunResult missing_trials = run_config(config);
  CHECK(missing_trials.exit_code == 2);
  CHECK(missing_trials.err.find("--trials") != std::string::npos);
}

TEST_CASE("numerical failures exit with code 3 naming the module error") {
  RunConfig config;
  config.command = Command::kSimulate;
  config.n = 4;
  config.alpha = 1.0;
  config.trials = 10;
  config.scenario = "warp-drive";
  const RunResult result = run_config(config);
  CHECK(result.exit_code == 3);
  CHECK(result.err.find("UnknownScenario") != std::string::npos);
}

TEST_CASE("simulate output is deterministic and internally consistent") {
  RunConfig config;
  config.command = Command::kSimulate;
  config.n = 2;
  config.alpha = 1.0;
  config.trials = 5000;
  config.seed = 31415;
  const RunResult first = run_config(config);
  const RunResult second = run_config(config);
  REQUIRE(first.exit_code == 0);
  CHECK(first.out == second.out);  // byte-identical
  const Json doc = Json::parse(first.out);
  CHECK(doc["scenario"] == "usd-two");
  CHECK(doc["wrong_count"] == 0);
  CHECK(doc["success_count"].get<long long>() +
            doc["inconclusive_count"].get<long long>() ==
        5000);
  CHECK(doc["rng"] == "mt19937_64");
}

TEST_CASE("precision controls significant digits and round-trips") {
  RunConfig config;
  config.command = Command::kBound;
  config.n = 4;
  config.alpha = 2.0;
  config.beta = 2.3;
  config.precision = 6;
  const RunResult result = run_config(config);
  REQUIRE(result.exit_code == 0);
  const Json doc = Json::parse(result.out);
  const double p_up = doc["p_up"].get<double>();
  CHECK(p_up == 0.980248);  // rounded to 6 significant digits

  config.precision = 15;
  const Json full = Json::parse(run_config(config).out);
  CHECK(std::abs(full["p_up"].get<double>() - 0.9802476164071465) < 1e-14);
}

TEST_CASE("csv output has a header and one row per scalar") {
  RunConfig config;
  config.command = Command::kSpectrum;
  config.n = 2;
  config.alpha = 1.0;
  config.format = OutputFormat::kCsv;
  const RunResult result = run_config(config);
  REQUIRE(result.exit_code == 0);
  CHECK(result.out.rfind("field,value\n", 0) == 0);
  CHECK(result.out.find("spectrum[0]") != std::string::npos);
  CHECK(result.out.find("usd_success") != std::string::npos);
}

TEST_CASE("verify command runs each property") {
  RunConfig config;
  config.command = Command::kVerify;
  config.n = 4;
  config.grid_step = 0.05;
  for (const std::string property : {"1", "2", "logconcave"}) {
    config.property = property;
    const RunResult result = run_config(config);
    REQUIRE(result.exit_code == 0);
    const Json doc = Json::parse(result.out);
    CHECK(doc["report"]["holds"].get<bool>());
  }
}

TEST_CASE("reproduce certifies the reference values") {
  RunConfig config;
  config.command = Command::kReproduce;
  const RunResult result = run_config(config);
  REQUIRE(result.exit_code == 0);
  const Json doc = Json::parse(result.out);
  CHECK(doc["all_pass"].get<bool>());
  CHECK(doc["checks"]["p_up"]["pass"].get<bool>());
  CHECK(doc["lemma1"]["min_unique"].get<bool>());
  CHECK_FALSE(doc["lemma1"]["saturates"].get<bool>());

  config.tolerance_scale = 0.0;
  const Json strict = Json::parse(run_config(config).out);
  CHECK_FALSE(strict["all_pass"].get<bool>());
}
