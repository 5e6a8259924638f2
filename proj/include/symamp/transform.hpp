#pragma once

// Amplification bounds and optimal transform plans between symmetric
// coherent-state sets of the same size: the USD ratio upper bound, the best
// leakless (cyclic-shift) plan, the LP-optimal leaky plan, redundancy
// recovery, and the non-saturation check for nontrivial leaks.
//
// A plan with success probability p, leak spectrum lambda_L and redundancy
// spectrum lambda_R realizes
//   lambda_A = p (lambda_B * lambda_L) + (1 - p) lambda_R
// componentwise, where * is the 1/n-normalized circular convolution.

#include <cstdint>
#include <optional>

#include "symamp/coherent.hpp"
#include "symamp/spectral.hpp"

namespace symamp {

// Amplify n states from source_amplitude to target_amplitude (gain >= 1).
class AmplificationRequest {
 public:
  AmplificationRequest(int n, double source_amplitude, double target_amplitude);

  int size() const { return n_; }
  double source_amplitude() const { return source_; }
  double target_amplitude() const { return target_; }
  double gain() const { return target_ / source_; }

  SymmetricCoherentSet source_set() const { return {n_, source_}; }
  SymmetricCoherentSet target_set() const { return {n_, target_}; }

 private:
  int n_;
  double source_;
  double target_;
};

enum class PlanMode { kLeaklessTrivial, kLeaklessShifted, kLeaky };

const char* to_string(PlanMode mode);

struct TransformPlan {
  double p = 0.0;
  Spectrum leak;
  std::optional<Spectrum> redundancy;
  PlanMode mode = PlanMode::kLeaklessTrivial;
  // Set iff the leak is a point mass n * e_shift.
  std::optional<int> shift;
};

struct Lemma1Report {
  bool min_unique = false;
  double best_nontrivial_leaky_p = 0.0;
  double p_up = 0.0;
  bool saturates = false;
};

// Optimal unambiguous-discrimination success probability: min_j lambda_j.
double usd_success(const SymmetricCoherentSet& set);

// d_A / d_B. Returns 0 for a zero source amplitude (identical states admit
// no perfect amplification).
double upper_bound(const AmplificationRequest& req);

// Best plan over trivial leaks n * e_s, p(s) = min_i lambda_A^i /
// lambda_B^{(i-s) mod n}; ties break toward the smallest shift.
TransformPlan leakless_optimum(const AmplificationRequest& req);

// Global optimum over all leak spectra via the substitution mu = p lambda_L:
// maximize sum(mu)/n subject to lambda_B * mu <= lambda_A, mu >= 0.
TransformPlan leaky_optimum(const AmplificationRequest& req);

// (lambda_A - p (lambda_B * leak)) / (1 - p). Requires p < 1 - 1e-12 and a
// residual no more negative than -1e-9 in any component.
Spectrum redundancy(const Spectrum& lambda_a, const Spectrum& lambda_b,
                    double p, const Spectrum& leak);

// Estimates the best success probability attainable with a genuinely
// nontrivial leak (>= 2 supported uDFT components) from support-restricted
// LPs plus `samples` random leak spectra, and reports whether any such plan
// reaches p_up - 1e-9.
Lemma1Report check_lemma1(const AmplificationRequest& req, int samples,
                          std::uint64_t seed);

// Ratio lambda_{n-1}(alpha) / lambda_{n-1}(beta) from the dedicated
// last-eigenvalue series; valid for 0 < alpha <= beta < 1 where it equals
// upper_bound. Throws OutOfRegime for beta >= 1.
double small_amplitude_popt(const AmplificationRequest& req);

}  // namespace symamp
