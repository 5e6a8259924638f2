#include "symamp/optics.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

namespace symamp::optics {

namespace {

const double kInvSqrt2 = 1.0 / std::sqrt(2.0);

void require_efficiency(double efficiency) {
  if (!(efficiency > 0.0) || efficiency > 1.0) {
    throw std::invalid_argument("detector efficiency must lie in (0, 1]");
  }
}

}  // namespace

int Rng::uniform_int(int n) {
  const std::uint64_t bound = UINT64_MAX - UINT64_MAX % static_cast<std::uint64_t>(n);
  std::uint64_t value;
  do {
    value = engine_();
  } while (value >= bound);
  return static_cast<int>(value % static_cast<std::uint64_t>(n));
}

std::pair<ModeAmplitude, ModeAmplitude> beamsplitter(ModeAmplitude a,
                                                     ModeAmplitude b) {
  return {(a + b) * kInvSqrt2, (a - b) * kInvSqrt2};
}

ModeAmplitude displace(ModeAmplitude a, Complex d) { return a + d; }

double click_probability(ModeAmplitude a, double efficiency) {
  require_efficiency(efficiency);
  return 1.0 - std::exp(-efficiency * std::norm(a));
}

UsdOutcome usd_two(double alpha, int actual_sign, Rng& rng, double efficiency) {
  if (!(alpha >= 0.0)) {
    throw std::invalid_argument("alpha must be nonnegative");
  }
  if (actual_sign != 1 && actual_sign != -1) {
    throw std::invalid_argument("actual_sign must be +1 or -1");
  }
  const ModeAmplitude unknown = static_cast<double>(actual_sign) * alpha;
  const auto [port1, port2] = beamsplitter(unknown, ModeAmplitude(alpha));
  // One port is always vacuum, so at most one detector can fire.
  const bool click1 = rng.bernoulli(click_probability(port1, efficiency));
  const bool click2 = rng.bernoulli(click_probability(port2, efficiency));
  if (click1 && !click2) {
    return UsdOutcome::identified(0);
  }
  if (click2 && !click1) {
    return UsdOutcome::identified(1);
  }
  return UsdOutcome::inconclusive();
}

UsdOutcome usd_multiport(const SymmetricCoherentSet& set, int actual, Rng& rng,
                         double efficiency, std::optional<int> omit_branch) {
  const int n = set.size();
  if (actual < 0 || actual >= n) {
    throw std::invalid_argument("actual index out of range");
  }
  if (omit_branch && (*omit_branch < 0 || *omit_branch >= n)) {
    throw std::invalid_argument("omitted branch index out of range");
  }
  const int branches = omit_branch ? n - 1 : n;
  const double split = 1.0 / std::sqrt(static_cast<double>(branches));

  std::vector<bool> ruled_out(static_cast<size_t>(n), false);
  for (int k = 0; k < n; ++k) {
    if (omit_branch && k == *omit_branch) {
      continue;
    }
    const ModeAmplitude branch =
        displace(set.member(actual) * split, -set.member(k) * split);
    if (rng.bernoulli(click_probability(branch, efficiency))) {
      ruled_out[static_cast<size_t>(k)] = true;
    }
  }

  int survivor = -1;
  int survivors = 0;
  for (int k = 0; k < n; ++k) {
    if (!ruled_out[static_cast<size_t>(k)]) {
      survivor = k;
      ++survivors;
    }
  }
  if (survivors == 1) {
    return UsdOutcome::identified(survivor);
  }
  return UsdOutcome::inconclusive();
}

double usd_multiport_success(const SymmetricCoherentSet& set, int actual,
                             double efficiency) {
  require_efficiency(efficiency);
  const int n = set.size();
  const double a2 = set.amplitude() * set.amplitude();
  double product = 1.0;
  for (int k = 0; k < n; ++k) {
    if (k == actual) {
      continue;
    }
    const double separation = std::norm(std::polar(1.0, set.phase(actual)) -
                                        std::polar(1.0, set.phase(k)));
    product *= 1.0 - std::exp(-efficiency * a2 / n * separation);
  }
  return product;
}

std::optional<ModeAmplitude> amplify_pipeline(const SymmetricCoherentSet& set,
                                              double gain, int actual,
                                              Rng& rng, double efficiency) {
  if (!(gain >= 1.0)) {
    throw std::invalid_argument("gain must be at least 1");
  }
  UsdOutcome outcome = UsdOutcome::inconclusive();
  if (set.size() == 2) {
    outcome = usd_two(set.amplitude(), actual == 0 ? 1 : -1, rng, efficiency);
  } else {
    outcome = usd_multiport(set, actual, rng, efficiency);
  }
  if (!outcome.is_identified()) {
    return std::nullopt;
  }
  // Phase modulation of the reference beam: the emitted amplitude is the
  // identified member scaled by the gain, exactly.
  return gain * set.member(*outcome.index);
}

ScenarioKind Scenario::parse_kind(const std::string& name) {
  if (name == "usd-two") {
    return ScenarioKind::kUsdTwo;
  }
  if (name == "usd-multiport") {
    return ScenarioKind::kUsdMultiport;
  }
  if (name == "amplify") {
    return ScenarioKind::kAmplifyPipeline;
  }
  throw UnknownScenario("no scenario named '" + name + "'");
}

const char* Scenario::kind_name() const {
  switch (kind) {
    case ScenarioKind::kUsdTwo: return "usd-two";
    case ScenarioKind::kUsdMultiport: return "usd-multiport";
    case ScenarioKind::kAmplifyPipeline: return "amplify";
  }
  return "unknown";
}

double Scenario::analytic_success() const {
  switch (kind) {
    case ScenarioKind::kUsdTwo:
      return 1.0 - std::exp(-2.0 * efficiency * alpha * alpha);
    case ScenarioKind::kUsdMultiport:
      return usd_multiport_success({n, alpha}, 0, efficiency);
    case ScenarioKind::kAmplifyPipeline:
      if (n == 2) {
        return 1.0 - std::exp(-2.0 * efficiency * alpha * alpha);
      }
      return usd_multiport_success({n, alpha}, 0, efficiency);
  }
  return 0.0;
}

SimReport monte_carlo(const Scenario& scenario, long long trials,
                      std::uint64_t seed) {
  if (trials < 1) {
    throw std::invalid_argument("trials must be at least 1");
  }
  require_efficiency(scenario.efficiency);
  Rng rng(seed);

  SimReport report;
  report.trials = trials;
  report.seed = seed;

  switch (scenario.kind) {
    case ScenarioKind::kUsdTwo: {
      for (long long t = 0; t < trials; ++t) {
        const int actual = rng.uniform_int(2);
        const UsdOutcome outcome = usd_two(
            scenario.alpha, actual == 0 ? 1 : -1, rng, scenario.efficiency);
        if (outcome.is_identified()) {
          (*outcome.index == actual ? report.success_count
                                    : report.wrong_count)++;
        }
      }
      break;
    }
    case ScenarioKind::kUsdMultiport: {
      const SymmetricCoherentSet set(scenario.n, scenario.alpha);
      for (long long t = 0; t < trials; ++t) {
        const int actual = rng.uniform_int(scenario.n);
        const UsdOutcome outcome =
            usd_multiport(set, actual, rng, scenario.efficiency);
        if (outcome.is_identified()) {
          (*outcome.index == actual ? report.success_count
                                    : report.wrong_count)++;
        }
      }
      break;
    }
    case ScenarioKind::kAmplifyPipeline: {
      const SymmetricCoherentSet set(scenario.n, scenario.alpha);
      for (long long t = 0; t < trials; ++t) {
        const int actual = rng.uniform_int(scenario.n);
        const auto emitted = amplify_pipeline(set, scenario.gain, actual, rng,
                                              scenario.efficiency);
        if (emitted) {
          (*emitted == scenario.gain * set.member(actual)
               ? report.success_count
               : report.wrong_count)++;
        }
      }
      break;
    }
  }

  report.empirical_rate =
      static_cast<double>(report.success_count) / static_cast<double>(trials);
  report.ci_halfwidth =
      3.0 * std::sqrt(report.empirical_rate * (1.0 - report.empirical_rate) /
                      static_cast<double>(trials));
  return report;
}

}  // namespace symamp::optics
