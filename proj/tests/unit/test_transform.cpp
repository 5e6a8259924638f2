#include <cmath>
#include <random>
#include <vector>

#include <doctest.h>

#include "reference.hpp"
#include "symamp/spectral.hpp"
#include "symamp/transform.hpp"

using namespace symamp;

namespace {

// lambda_A = p (lambda_B * leak) + (1 - p) lambda_R, componentwise.
void check_reconstruction(const AmplificationRequest& req,
                          const TransformPlan& plan, double tol = 1e-9) {
  const Spectrum lambda_a = spectrum_series(req.source_set());
  const Spectrum lambda_b = spectrum_series(req.target_set());
  const std::vector<double> conv =
      circular_convolve_raw(lambda_b.values(), plan.leak.values());
  for (int i = 0; i < req.size(); ++i) {
    double reconstructed = plan.p * conv[static_cast<size_t>(i)];
    if (plan.redundancy) {
      reconstructed += (1.0 - plan.p) * (*plan.redundancy)[i];
    }
    CHECK(std::abs(lambda_a[i] - reconstructed) < tol);
  }
  CHECK(is_valid_spectrum(plan.leak.values()));
  if (plan.redundancy) {
    CHECK(is_valid_spectrum(plan.redundancy->values()));
  }
}

}  // namespace

TEST_CASE("usd_success examples") {
  CHECK(usd_success({2, 1.0}) ==
        doctest::Approx(0.8646647167633873).epsilon(1e-13));
  CHECK(std::abs(usd_success({4, 2.0}) - 0.971942) < 1e-5);
  CHECK(usd_success({3, 0.0}) == 0.0);
  CHECK(usd_success({5, 0.0}) == 0.0);
}

TEST_CASE("upper bound on the worked example and edge cases") {
  CHECK(std::abs(upper_bound({4, 2.0, 2.3}) - 0.980248) < 1e-5);
  CHECK(upper_bound({3, 0.5, 0.5}) == 1.0);
  // n=2 closed form: (1 - e^{-2 alpha^2}) / (1 - e^{-2 beta^2}).
  const double expected = (1.0 - std::exp(-0.5)) / (1.0 - std::exp(-1.28));
  CHECK(upper_bound({2, 0.5, 0.8}) == doctest::Approx(expected).epsilon(1e-12));
  CHECK(upper_bound({2, 0.5, 0.8}) ==
        doctest::Approx(0.5449995415751495).epsilon(1e-12));
  CHECK(upper_bound({4, 0.0, 1.0}) == 0.0);
}

TEST_CASE("request validation") {
  CHECK_THROWS_AS(AmplificationRequest(4, 1.0, 0.5), std::invalid_argument);
  CHECK_THROWS_AS(AmplificationRequest(1, 0.5, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(AmplificationRequest(4, -1.0, 1.0), std::invalid_argument);
  CHECK(AmplificationRequest(4, 2.0, 2.3).gain() ==
        doctest::Approx(1.15).epsilon(1e-14));
}

TEST_CASE("leakless optimum reproduces the reference value via shift 3") {
  const AmplificationRequest req(4, 2.0, 2.3);
  const TransformPlan plan = leakless_optimum(req);
  CHECK(std::abs(plan.p - 0.977298) < 1e-5);
  REQUIRE(plan.shift.has_value());
  CHECK(*plan.shift == 3);
  CHECK(plan.mode == PlanMode::kLeaklessShifted);
  check_reconstruction(req, plan);
  // Optimality pins at least one ratio, so the redundancy has a zero entry.
  REQUIRE(plan.redundancy.has_value());
  double smallest = 1e300;
  for (double v : plan.redundancy->values()) {
    smallest = std::min(smallest, v);
  }
  CHECK(smallest < 1e-9);
}

TEST_CASE("leakless optimum saturates the bound at small amplitudes") {
  const AmplificationRequest req(4, 0.3, 0.7);
  const TransformPlan plan = leakless_optimum(req);
  CHECK(plan.p == doctest::Approx(upper_bound(req)).epsilon(1e-9));
  REQUIRE(plan.shift.has_value());
  CHECK(*plan.shift == 0);
  CHECK(plan.mode == PlanMode::kLeaklessTrivial);
  check_reconstruction(req, plan);
}

TEST_CASE("identity request is a unit-probability trivial plan") {
  for (const TransformPlan& plan :
       {leakless_optimum({3, 1.2, 1.2}), leaky_optimum({3, 1.2, 1.2})}) {
    CHECK(plan.p == 1.0);
    CHECK(plan.mode == PlanMode::kLeaklessTrivial);
    CHECK_FALSE(plan.redundancy.has_value());
    CHECK(plan.leak.values() == Spectrum::point_mass(3, 0).values());
  }
}

TEST_CASE("leaky optimum beats leakless on the worked example") {
  const AmplificationRequest req(4, 2.0, 2.3);
  const TransformPlan plan = leaky_optimum(req);
  CHECK(std::abs(plan.p - 0.978604) < 2e-4);
  CHECK(plan.mode == PlanMode::kLeaky);
  CHECK(plan.p > leakless_optimum(req).p);
  CHECK(plan.p < upper_bound(req));
  // The optimal leak spreads over two uDFT components.
  int support = 0;
  for (double v : plan.leak.values()) {
    if (v > 1e-6) {
      ++support;
    }
  }
  CHECK(support >= 2);
  check_reconstruction(req, plan);
}

TEST_CASE("leaky optimum returns a trivial leak at small amplitudes") {
  const AmplificationRequest req(4, 0.3, 0.7);
  const TransformPlan plan = leaky_optimum(req);
  CHECK(plan.p == doctest::Approx(upper_bound(req)).epsilon(1e-9));
  CHECK(plan.mode == PlanMode::kLeaklessTrivial);
  CHECK(plan.leak.values() == Spectrum::point_mass(4, 0).values());
  check_reconstruction(req, plan);
}

TEST_CASE("LP certificate: some constraint is active at the optimum") {
  std::mt19937_64 rng(17);
  std::uniform_real_distribution<double> u(0.1, 2.8);
  for (int trial = 0; trial < 20; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 5);
    double a = u(rng), b = u(rng);
    if (a > b) std::swap(a, b);
    if (b - a < 1e-6) continue;
    const AmplificationRequest req(n, a, b);
    const TransformPlan plan = leaky_optimum(req);
    const Spectrum lambda_a = spectrum_series(req.source_set());
    const Spectrum lambda_b = spectrum_series(req.target_set());
    const std::vector<double> conv =
        circular_convolve_raw(lambda_b.values(), plan.leak.values());
    double closest = 1e300;
    for (int i = 0; i < n; ++i) {
      closest = std::min(closest,
                         std::abs(lambda_a[i] - plan.p * conv[static_cast<size_t>(i)]));
    }
    CHECK(closest < 1e-9);
    check_reconstruction(req, plan);
  }
}

TEST_CASE("ordering chain usd <= leakless <= leaky <= upper") {
  std::mt19937_64 rng(41);
  std::uniform_real_distribution<double> u(0.05, 3.0);
  for (int trial = 0; trial < 30; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 5);
    double a = u(rng), b = u(rng);
    if (a > b) std::swap(a, b);
    const AmplificationRequest req(n, a, b);
    const double floor = usd_success(req.source_set());
    const double leakless = leakless_optimum(req).p;
    const double leaky = leaky_optimum(req).p;
    const double ceiling = upper_bound(req);
    CHECK(floor <= leakless + 1e-9);
    CHECK(leakless <= leaky + 1e-9);
    CHECK(leaky <= ceiling + 1e-9);
  }
}

TEST_CASE("redundancy formula and failure modes") {
  const Spectrum lambda_a = spectrum_series({4, 1.1});
  const Spectrum lambda_b = spectrum_series({4, 1.9});
  // p = 0: the redundancy carries the full source spectrum.
  const Spectrum everything =
      redundancy(lambda_a, lambda_b, 0.0, Spectrum::point_mass(4, 0));
  for (int i = 0; i < 4; ++i) {
    CHECK(everything[i] == doctest::Approx(lambda_a[i]).epsilon(1e-14));
  }
  // Identity target at p = 1/2 also returns the source spectrum.
  const Spectrum half =
      redundancy(lambda_a, lambda_a, 0.5, Spectrum::point_mass(4, 0));
  for (int i = 0; i < 4; ++i) {
    CHECK(half[i] == doctest::Approx(lambda_a[i]).epsilon(1e-12));
  }
  CHECK_THROWS_AS(
      redundancy(lambda_a, lambda_b, 1.0, Spectrum::point_mass(4, 0)),
      DegenerateP);
  // Overshooting p drives some residual component below -1e-9.
  CHECK_THROWS_AS(
      redundancy(lambda_a, lambda_b, 0.99, Spectrum::point_mass(4, 0)),
      InvalidResidual);
}

TEST_CASE("lemma 1 report on the worked example") {
  const AmplificationRequest req(4, 2.0, 2.3);
  const Lemma1Report report = check_lemma1(req, 200, 2024);
  CHECK(report.min_unique);
  CHECK_FALSE(report.saturates);
  CHECK(std::abs(report.p_up - 0.980248) < 1e-5);
  CHECK(report.best_nontrivial_leaky_p < report.p_up - 1e-9);
  // The unrestricted optimum is itself nontrivial, so the search finds it.
  CHECK(report.best_nontrivial_leaky_p >= 0.978604 - 1e-4);
}

TEST_CASE("lemma 1 at small amplitudes: nontrivial leaks stay suboptimal") {
  const Lemma1Report report = check_lemma1({4, 0.3, 0.7}, 100, 7);
  CHECK(report.min_unique);
  CHECK_FALSE(report.saturates);
  CHECK(report.best_nontrivial_leaky_p < report.p_up - 1e-9);
}

TEST_CASE("lemma 1 samples random supports above n = 6") {
  const Lemma1Report report = check_lemma1({8, 1.5, 1.8}, 50, 3);
  CHECK(report.best_nontrivial_leaky_p > 0.0);
  CHECK(report.best_nontrivial_leaky_p <= report.p_up + 1e-12);
}

TEST_CASE("lemma 1 identity request: nontrivial leaks cannot reach p = 1") {
  const Lemma1Report report = check_lemma1({2, 1.0, 1.0}, 100, 7);
  CHECK(report.min_unique);
  CHECK(report.p_up == 1.0);
  CHECK(report.best_nontrivial_leaky_p < 1.0);
  CHECK_FALSE(report.saturates);
}

TEST_CASE("small amplitude closed form matches the bound") {
  const double expected = (1.0 - std::exp(-0.5)) / (1.0 - std::exp(-1.28));
  CHECK(small_amplitude_popt({2, 0.5, 0.8}) ==
        doctest::Approx(expected).epsilon(1e-12));
  CHECK(std::abs(small_amplitude_popt({3, 0.2, 0.9}) -
                 upper_bound({3, 0.2, 0.9})) < 1e-12);
  // Continuity toward the identity.
  CHECK(small_amplitude_popt({3, 0.7, 0.7 + 1e-9}) ==
        doctest::Approx(1.0).epsilon(1e-7));
  CHECK_THROWS_AS(small_amplitude_popt({3, 0.5, 1.2}), OutOfRegime);
}
