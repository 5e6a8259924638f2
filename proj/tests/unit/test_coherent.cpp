#include <cmath>
#include <complex>
#include <random>

#include <doctest.h>

#include "reference.hpp"
#include "symamp/coherent.hpp"

using namespace symamp;

namespace {

// Worked 4-state example, 6 significant figures.
const std::vector<double> kLambdaA4 = {0.976392, 0.971942, 1.02428, 1.02739};
const std::vector<double> kLambdaB4 = {1.00553, 0.991527, 0.99452, 1.00842};

}  // namespace

TEST_CASE("overlap of identical states is exactly one") {
  CHECK(overlap(Complex(0.0, 0.0), Complex(0.0, 0.0)) == Complex(1.0, 0.0));
  for (Complex a : {Complex(1.3, -0.4), Complex(0.0, 2.0), Complex(-2.5, 0.0)}) {
    CHECK(std::abs(overlap(a, a) - Complex(1.0, 0.0)) < 1e-15);
  }
}

TEST_CASE("overlap of opposite unit amplitudes") {
  // exp(-2), from direct evaluation of the overlap formula at a=1, b=-1.
  const Complex value = overlap(Complex(1.0, 0.0), Complex(-1.0, 0.0));
  CHECK(value.real() == doctest::Approx(0.1353352832366127).epsilon(1e-14));
  CHECK(std::abs(value.imag()) < 1e-16);
}

TEST_CASE("overlap modulus is exp(-|a-b|^2/2)") {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> u(-3.0, 3.0);
  for (int k = 0; k < 200; ++k) {
    const double a = u(rng);
    const double b = u(rng);
    const double expected = std::exp(-0.5 * (a - b) * (a - b));
    CHECK(std::abs(overlap(a, b)) == doctest::Approx(expected).epsilon(1e-12));
  }
}

TEST_CASE("gram matrix of a zero-amplitude pair is all ones") {
  const GramMatrix g = gram_matrix({2, 0.0});
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      CHECK(g.entry(i, j) == Complex(1.0, 0.0));
    }
  }
}

TEST_CASE("gram matrix off-diagonal at n=2, alpha=1") {
  const GramMatrix g = gram_matrix({2, 1.0});
  CHECK(g.entry(0, 1).real() == doctest::Approx(0.1353352832366127).epsilon(1e-14));
  CHECK(std::abs(g.entry(0, 1).imag()) < 1e-15);
}

TEST_CASE("gram matrix is exactly circulant and Hermitian") {
  for (int n : {2, 3, 5, 8}) {
    const GramMatrix g = gram_matrix({n, 1.7});
    CHECK(g.circulant_residue() <= 1e-14);
    for (int i = 0; i < n; ++i) {
      CHECK(g.entry(i, i) == Complex(1.0, 0.0));
      for (int j = 0; j < n; ++j) {
        CHECK(g.entry(i, j) == std::conj(g.entry(j, i)));
      }
    }
  }
}

TEST_CASE("spectrum_series matches the 2x2 closed form") {
  const Spectrum s = spectrum_series({2, 1.0});
  const std::vector<double> expected = reference::two_state_spectrum(1.0);
  CHECK(s[0] == doctest::Approx(expected[0]).epsilon(1e-14));
  CHECK(s[1] == doctest::Approx(expected[1]).epsilon(1e-14));
}

TEST_CASE("spectrum_series reproduces the reference target spectrum") {
  const Spectrum s = spectrum_series({4, 2.3});
  for (int j = 0; j < 4; ++j) {
    CHECK(std::abs(s[j] - kLambdaB4[static_cast<size_t>(j)]) < 1e-5);
  }
}

TEST_CASE("zero amplitude concentrates the whole trace in lambda_0") {
  for (int n : {2, 3, 6}) {
    const Spectrum s = spectrum_series({n, 0.0});
    CHECK(s[0] == doctest::Approx(static_cast<double>(n)));
    for (int j = 1; j < n; ++j) {
      CHECK(s[j] == 0.0);
    }
  }
}

TEST_CASE("spectrum_closed matches series and reference values") {
  const Spectrum closed = spectrum_closed({4, 2.0});
  for (int j = 0; j < 4; ++j) {
    CHECK(std::abs(closed[j] - kLambdaA4[static_cast<size_t>(j)]) < 1e-5);
  }
  const Spectrum two = spectrum_closed({2, 1.0});
  CHECK(two[0] == doctest::Approx(1.1353352832366127).epsilon(1e-13));
  CHECK(two[1] == doctest::Approx(0.8646647167633873).epsilon(1e-13));
  const Spectrum degenerate = spectrum_closed({3, 0.0});
  CHECK(degenerate[0] == doctest::Approx(3.0));
  CHECK(degenerate[1] == doctest::Approx(0.0));
  CHECK(degenerate[2] == doctest::Approx(0.0));
}

TEST_CASE("series and closed routes agree to 1e-10 on a grid") {
  for (int n = 2; n <= 8; ++n) {
    for (int k = 1; k <= 30; ++k) {
      const double alpha = 0.1 * k;
      const Spectrum series = spectrum_series({n, alpha});
      const Spectrum closed = spectrum_closed({n, alpha});
      for (int j = 0; j < n; ++j) {
        CHECK(std::abs(series[j] - closed[j]) < 1e-10);
      }
    }
  }
}

TEST_CASE("spectra sum to n and match the dense eigensolver") {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> u(0.05, 3.0);
  for (int trial = 0; trial < 25; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 7);
    const double alpha = u(rng);
    const Spectrum s = spectrum_series({n, alpha});
    CHECK(std::abs(s.sum() - n) < 1e-9);
    const std::vector<double> dense =
        reference::dense_eigenvalues(gram_matrix({n, alpha}));
    const std::vector<double> ours = reference::sorted(s.values());
    for (int j = 0; j < n; ++j) {
      CHECK(std::abs(ours[static_cast<size_t>(j)] - dense[static_cast<size_t>(j)]) < 1e-10);
    }
  }
}

TEST_CASE("spectrum construction clamps round-off and rejects violations") {
  const Spectrum clamped(std::vector<double>{2.0 + 5e-11, -5e-11});
  CHECK(clamped[1] == 0.0);
  CHECK_THROWS_AS(Spectrum(std::vector<double>{2.0, -1e-8}), InvalidSpectrum);
  CHECK_THROWS_AS(Spectrum(std::vector<double>{1.5, 1.5}), InvalidSpectrum);
}

TEST_CASE("set and request constructors validate their domains") {
  CHECK_THROWS_AS(SymmetricCoherentSet(1, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(SymmetricCoherentSet(4, -0.5), std::invalid_argument);
  CHECK_THROWS_AS(spectrum_series({2, 1.0}, 0.0), std::invalid_argument);
}
