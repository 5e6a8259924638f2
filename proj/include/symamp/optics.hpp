#pragma once

// Linear-optics simulation of the USD-based amplifier: balanced beam
// splitters, ideal displacements, vacuum-threshold detectors, the two-state
// discriminator, the N-branch multiport scheme, the amplification pipeline,
// and Monte-Carlo statistics.
//
// Detectors sample only the vacuum/non-vacuum distinction: a mode of
// amplitude a clicks with probability 1 - exp(-efficiency |a|^2). Detectors
// are ideal by default (efficiency 1, no dark counts), which keeps every
// identification unambiguous.

#include <complex>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <utility>

#include "symamp/coherent.hpp"

namespace symamp::optics {

using ModeAmplitude = std::complex<double>;

// Deterministic seeded stream. Uniform doubles come from the top 53 bits of
// mt19937_64 output, so sequences are stable across platforms.
class Rng {
 public:
  static constexpr const char* kAlgorithm = "mt19937_64";

  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  double uniform() { return (engine_() >> 11) * 0x1.0p-53; }
  bool bernoulli(double p) { return uniform() < p; }
  int uniform_int(int n);

 private:
  std::mt19937_64 engine_;
};

struct UsdOutcome {
  static UsdOutcome identified(int index) { return {index}; }
  static UsdOutcome inconclusive() { return {std::nullopt}; }

  bool is_identified() const { return index.has_value(); }

  std::optional<int> index;
};

// |a,b> -> |(a+b)/sqrt2, (a-b)/sqrt2>
std::pair<ModeAmplitude, ModeAmplitude> beamsplitter(ModeAmplitude a,
                                                     ModeAmplitude b);

ModeAmplitude displace(ModeAmplitude a, Complex d);

// 1 - exp(-efficiency |a|^2), efficiency in (0, 1].
double click_probability(ModeAmplitude a, double efficiency);

// Combine the unknown state (actual_sign * alpha) with a fixed |alpha> on a
// balanced beam splitter; a click on port 1 identifies +alpha (index 0), on
// port 2 identifies -alpha (index 1); no click is inconclusive. Fails with
// probability exp(-2 efficiency alpha^2) and never misidentifies.
UsdOutcome usd_two(double alpha, int actual_sign, Rng& rng,
                   double efficiency = 1.0);

// Split the input into equal branches and displace branch k by the k-th
// candidate; a click rules that candidate out, and the input is identified
// when exactly one candidate survives. By default all n candidates are
// tested. `omit_branch` selects the n-1-branch variant that leaves one
// candidate untested; a run can then only ever certify the omitted
// candidate (by ruling out all n-1 others), so its success rate is lower.
UsdOutcome usd_multiport(const SymmetricCoherentSet& set, int actual, Rng& rng,
                         double efficiency = 1.0,
                         std::optional<int> omit_branch = std::nullopt);

// Analytic multiport success probability for input index `actual`:
// prod_{k != actual} (1 - exp(-(efficiency alpha^2 / n) |w^actual - w^k|^2)).
double usd_multiport_success(const SymmetricCoherentSet& set, int actual,
                             double efficiency = 1.0);

// Run the discriminator (usd_two for n == 2, usd_multiport otherwise); on
// identification emit gain * member(m) exactly, else report failure.
std::optional<ModeAmplitude> amplify_pipeline(const SymmetricCoherentSet& set,
                                              double gain, int actual,
                                              Rng& rng,
                                              double efficiency = 1.0);

enum class ScenarioKind { kUsdTwo, kUsdMultiport, kAmplifyPipeline };

struct Scenario {
  ScenarioKind kind = ScenarioKind::kUsdTwo;
  int n = 2;
  double alpha = 1.0;
  double gain = 1.0;       // amplify_pipeline only
  double efficiency = 1.0;

  // Names: "usd-two", "usd-multiport", "amplify". Throws UnknownScenario.
  static ScenarioKind parse_kind(const std::string& name);
  const char* kind_name() const;
  // Success probability of one trial with a uniformly drawn input index.
  double analytic_success() const;
};

struct SimReport {
  long long trials = 0;
  long long success_count = 0;
  long long wrong_count = 0;
  double empirical_rate = 0.0;
  double ci_halfwidth = 0.0;  // 3 sigma, normal approximation
  std::uint64_t seed = 0;
  std::string rng = Rng::kAlgorithm;
};

// Sequential trials on one seeded stream; the input index is drawn uniformly
// each trial. Identical seed and scenario give an identical report.
SimReport monte_carlo(const Scenario& scenario, long long trials,
                      std::uint64_t seed);

}  // namespace symamp::optics
