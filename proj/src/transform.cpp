#include "symamp/transform.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <random>
#include <sstream>
#include <stdexcept>
#include <vector>

#include "symamp/linprog.hpp"

namespace symamp {

namespace {

// Leak spectra produced by the optimizer count as trivial when all but one
// component carry less than this fraction of the total mass n.
constexpr double kTrivialLeakFraction = 1e-9;
// Support-restricted searches force every supported leak component to carry
// at least this fraction of the total mass, so the leak stays nontrivial.
constexpr double kSupportFloorFraction = 1e-3;
constexpr double kSaturationTol = 1e-9;
constexpr double kUniqueMinRelativeGap = 1e-9;

std::vector<double> shifted(const std::vector<double>& v, int s) {
  const int n = static_cast<int>(v.size());
  std::vector<double> out(v.size());
  for (int i = 0; i < n; ++i) {
    out[static_cast<size_t>(i)] = v[static_cast<size_t>((i - s + n) % n)];
  }
  return out;
}

double min_ratio(const std::vector<double>& numer,
                 const std::vector<double>& denom) {
  double best = std::numeric_limits<double>::infinity();
  for (size_t i = 0; i < numer.size(); ++i) {
    best = std::min(best, numer[i] / denom[i]);
  }
  return best;
}

TransformPlan identity_plan(int n) {
  return TransformPlan{1.0, Spectrum::point_mass(n, 0), std::nullopt,
                       PlanMode::kLeaklessTrivial, 0};
}

TransformPlan degenerate_source_plan(const Spectrum& lambda_a) {
  // Identical source states: no perfect transform succeeds, everything is
  // carried by the redundancy.
  return TransformPlan{0.0, Spectrum::point_mass(lambda_a.size(), 0),
                       Spectrum(lambda_a.values()), PlanMode::kLeaklessTrivial,
                       0};
}

// Best success probability over leaks restricted to the given support, with
// every supported component floored away from zero. Returns the achieved
// objective sum(mu)/n, or 0 if the restriction is infeasible beyond mu = 0.
double restricted_support_optimum(const std::vector<double>& lambda_a,
                                  const std::vector<double>& lambda_b,
                                  const std::vector<int>& support) {
  const int n = static_cast<int>(lambda_a.size());
  const int width = static_cast<int>(support.size());
  std::vector<std::vector<double>> a;
  std::vector<double> b;
  a.reserve(static_cast<size_t>(n + width));
  for (int i = 0; i < n; ++i) {
    std::vector<double> row(static_cast<size_t>(width));
    for (int k = 0; k < width; ++k) {
      row[static_cast<size_t>(k)] =
          lambda_b[static_cast<size_t>((i - support[static_cast<size_t>(k)] + n) % n)] / n;
    }
    a.push_back(std::move(row));
    b.push_back(lambda_a[static_cast<size_t>(i)]);
  }
  // mu_k >= floor * sum(mu) for each supported component.
  for (int k = 0; k < width; ++k) {
    std::vector<double> row(static_cast<size_t>(width), kSupportFloorFraction);
    row[static_cast<size_t>(k)] -= 1.0;
    a.push_back(std::move(row));
    b.push_back(0.0);
  }
  const std::vector<double> c(static_cast<size_t>(width), 1.0 / n);
  const lp::Result result = lp::maximize(a, b, c);
  return result.objective;
}

}  // namespace

AmplificationRequest::AmplificationRequest(int n, double source_amplitude,
                                           double target_amplitude)
    : n_(n), source_(source_amplitude), target_(target_amplitude) {
  if (n < 2) {
    throw std::invalid_argument("amplification needs at least 2 states");
  }
  if (!(source_amplitude >= 0.0)) {
    throw std::invalid_argument("source amplitude must be nonnegative");
  }
  if (!(target_amplitude >= source_amplitude)) {
    throw std::invalid_argument("target amplitude must satisfy beta >= alpha");
  }
}

const char* to_string(PlanMode mode) {
  switch (mode) {
    case PlanMode::kLeaklessTrivial: return "leakless-trivial";
    case PlanMode::kLeaklessShifted: return "leakless-shifted";
    case PlanMode::kLeaky: return "leaky";
  }
  return "unknown";
}

double usd_success(const SymmetricCoherentSet& set) {
  return spectrum_series(set).min();
}

double upper_bound(const AmplificationRequest& req) {
  if (req.source_amplitude() == 0.0) {
    return 0.0;
  }
  return usd_success(req.source_set()) / usd_success(req.target_set());
}

TransformPlan leakless_optimum(const AmplificationRequest& req) {
  const int n = req.size();
  if (req.source_amplitude() == req.target_amplitude()) {
    return identity_plan(n);
  }
  const Spectrum lambda_a = spectrum_series(req.source_set());
  if (req.source_amplitude() == 0.0) {
    return degenerate_source_plan(lambda_a);
  }
  const Spectrum lambda_b = spectrum_series(req.target_set());

  double best_p = -1.0;
  int best_shift = 0;
  for (int s = 0; s < n; ++s) {
    const double p =
        min_ratio(lambda_a.values(), shifted(lambda_b.values(), s));
    if (p > best_p) {
      best_p = p;
      best_shift = s;
    }
  }
  TransformPlan plan{best_p, Spectrum::point_mass(n, best_shift), std::nullopt,
                     best_shift == 0 ? PlanMode::kLeaklessTrivial
                                     : PlanMode::kLeaklessShifted,
                     best_shift};
  if (plan.p < 1.0 - 1e-12) {
    plan.redundancy = redundancy(lambda_a, lambda_b, plan.p, plan.leak);
  }
  return plan;
}

TransformPlan leaky_optimum(const AmplificationRequest& req) {
  const int n = req.size();
  if (req.source_amplitude() == req.target_amplitude()) {
    return identity_plan(n);
  }
  const Spectrum lambda_a = spectrum_series(req.source_set());
  if (req.source_amplitude() == 0.0) {
    return degenerate_source_plan(lambda_a);
  }
  const Spectrum lambda_b = spectrum_series(req.target_set());

  // maximize sum(mu)/n subject to (lambda_B * mu)_i <= lambda_A^i, mu >= 0,
  // where mu = p lambda_L.
  std::vector<std::vector<double>> a(static_cast<size_t>(n),
                                     std::vector<double>(static_cast<size_t>(n)));
  for (int i = 0; i < n; ++i) {
    for (int k = 0; k < n; ++k) {
      a[static_cast<size_t>(i)][static_cast<size_t>(k)] =
          lambda_b[(i - k + n) % n] / n;
    }
  }
  const std::vector<double> c(static_cast<size_t>(n), 1.0 / n);
  const lp::Result result = lp::maximize(a, lambda_a.values(), c);

  const double mass = std::accumulate(result.x.begin(), result.x.end(), 0.0);
  if (mass <= 0.0) {
    return degenerate_source_plan(lambda_a);
  }

  std::vector<double> leak(static_cast<size_t>(n));
  int support = 0;
  int top = 0;
  for (int k = 0; k < n; ++k) {
    leak[static_cast<size_t>(k)] = result.x[static_cast<size_t>(k)] * n / mass;
    if (leak[static_cast<size_t>(k)] > kTrivialLeakFraction * n) {
      ++support;
    }
    if (leak[static_cast<size_t>(k)] > leak[static_cast<size_t>(top)]) {
      top = k;
    }
  }

  TransformPlan plan =
      support >= 2
          ? TransformPlan{result.objective, Spectrum(std::move(leak)),
                          std::nullopt, PlanMode::kLeaky, std::nullopt}
          // The vertex is a cyclic shift up to solver fuzz; snap it and
          // recompute the exact shift probability.
          : TransformPlan{min_ratio(lambda_a.values(),
                                    shifted(lambda_b.values(), top)),
                          Spectrum::point_mass(n, top), std::nullopt,
                          top == 0 ? PlanMode::kLeaklessTrivial
                                   : PlanMode::kLeaklessShifted,
                          top};
  if (plan.p < 1.0 - 1e-12) {
    plan.redundancy = redundancy(lambda_a, lambda_b, plan.p, plan.leak);
  }
  return plan;
}

Spectrum redundancy(const Spectrum& lambda_a, const Spectrum& lambda_b,
                    double p, const Spectrum& leak) {
  if (lambda_a.size() != lambda_b.size() || lambda_a.size() != leak.size()) {
    throw LengthMismatch("spectra passed to redundancy differ in length");
  }
  if (p >= 1.0 - 1e-12) {
    throw DegenerateP("no redundancy exists for p >= 1 - 1e-12");
  }
  const std::vector<double> conv =
      circular_convolve_raw(lambda_b.values(), leak.values());
  std::vector<double> out(conv.size());
  for (size_t i = 0; i < conv.size(); ++i) {
    const double residual = lambda_a[static_cast<int>(i)] - p * conv[i];
    if (residual < -1e-9) {
      std::ostringstream msg;
      msg << "residual component " << i << " = " << residual;
      throw InvalidResidual(msg.str());
    }
    out[i] = std::max(residual, 0.0) / (1.0 - p);
  }
  return Spectrum(std::move(out));
}

Lemma1Report check_lemma1(const AmplificationRequest& req, int samples,
                          std::uint64_t seed) {
  if (samples < 1) {
    throw std::invalid_argument("samples must be at least 1");
  }
  const int n = req.size();
  const Spectrum lambda_a = spectrum_series(req.source_set());
  const Spectrum lambda_b = spectrum_series(req.target_set());

  Lemma1Report report;
  report.p_up = upper_bound(req);

  std::vector<double> sorted = lambda_b.values();
  std::sort(sorted.begin(), sorted.end());
  report.min_unique =
      sorted[1] - sorted[0] >
      kUniqueMinRelativeGap * std::max(sorted[0], std::numeric_limits<double>::min());

  if (req.source_amplitude() == 0.0) {
    // Identical source states: every plan has p = 0 and the zero bound is
    // trivially met.
    report.best_nontrivial_leaky_p = 0.0;
    report.saturates = true;
    return report;
  }

  double best = 0.0;
  const auto consider_leak = [&](const std::vector<double>& leak) {
    const std::vector<double> conv =
        circular_convolve_raw(lambda_b.values(), leak);
    best = std::max(best, min_ratio(lambda_a.values(), conv));
  };

  std::mt19937_64 engine(seed);
  const auto uniform = [&engine]() {
    return (engine() >> 11) * 0x1.0p-53;
  };

  // Support-restricted optima. Enumerate every support of size >= 2 for
  // small n; sample random supports otherwise.
  std::vector<std::vector<int>> supports;
  if (n <= 6) {
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
      std::vector<int> support;
      for (int k = 0; k < n; ++k) {
        if (mask & (1u << k)) {
          support.push_back(k);
        }
      }
      if (support.size() >= 2) {
        supports.push_back(std::move(support));
      }
    }
  } else {
    for (int trial = 0; trial < 50; ++trial) {
      const int width = 2 + static_cast<int>(uniform() * (n - 1));
      std::vector<int> all(static_cast<size_t>(n));
      for (int k = 0; k < n; ++k) all[static_cast<size_t>(k)] = k;
      for (int k = 0; k < width; ++k) {
        const int other = k + static_cast<int>(uniform() * (n - k));
        std::swap(all[static_cast<size_t>(k)], all[static_cast<size_t>(other)]);
      }
      all.resize(static_cast<size_t>(std::min(width, n)));
      std::sort(all.begin(), all.end());
      supports.push_back(std::move(all));
    }
  }
  for (const auto& support : supports) {
    best = std::max(best, restricted_support_optimum(
                              lambda_a.values(), lambda_b.values(), support));
  }

  // Random leak spectra; exponential weights are almost surely nontrivial.
  for (int s = 0; s < samples; ++s) {
    std::vector<double> leak(static_cast<size_t>(n));
    double total = 0.0;
    for (int k = 0; k < n; ++k) {
      leak[static_cast<size_t>(k)] = -std::log1p(-uniform());
      total += leak[static_cast<size_t>(k)];
    }
    if (total <= 0.0) {
      continue;
    }
    for (double& x : leak) {
      x *= n / total;
    }
    consider_leak(leak);
  }

  report.best_nontrivial_leaky_p = best;
  report.saturates = best >= report.p_up - kSaturationTol;
  return report;
}

namespace {

// lambda_min(x) = e^{-x^2} n sum_r x^{2(n(r+1)-1)} / (n(r+1)-1)!, the last
// uDFT eigenvalue written as its own series.
double last_eigenvalue_series(int n, double x) {
  const double a2 = x * x;
  double term = 1.0;
  for (int k = 1; k <= n - 1; ++k) {
    term *= a2 / k;
  }
  double sum = 0.0;
  for (int r = 0; r < 100000; ++r) {
    sum += term;
    if (term == 0.0) {
      break;
    }
    double next = term;
    for (int k = n * r + n; k <= n * (r + 1) + n - 1; ++k) {
      next *= a2 / k;
    }
    if (next < term && next <= 1e-16 * sum) {
      break;
    }
    term = next;
  }
  return std::exp(-a2) * n * sum;
}

}  // namespace

double small_amplitude_popt(const AmplificationRequest& req) {
  if (req.target_amplitude() >= 1.0) {
    throw OutOfRegime("closed form requires target amplitude below one");
  }
  if (!(req.source_amplitude() > 0.0)) {
    throw std::invalid_argument("source amplitude must be positive");
  }
  return last_eigenvalue_series(req.size(), req.source_amplitude()) /
         last_eigenvalue_series(req.size(), req.target_amplitude());
}

}  // namespace symamp
