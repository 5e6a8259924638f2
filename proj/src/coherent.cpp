#include "symamp/coherent.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace symamp {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

// w^r for r = 0..n-1, computed from reduced angles so large index products
// never lose precision.
std::vector<Complex> unit_roots(int n) {
  std::vector<Complex> roots(static_cast<size_t>(n));
  for (int r = 0; r < n; ++r) {
    roots[static_cast<size_t>(r)] = std::polar(1.0, kTwoPi * r / n);
  }
  roots[0] = Complex(1.0, 0.0);
  return roots;
}

// sum_r a2^{nr+j} / (nr+j)!  with a2 = alpha^2, truncated once the next term
// is both decreasing and below tol * partial_sum. Terms grow until
// nr + j > a2, so the decrease guard matters for large amplitudes.
double collected_exp_series(int n, int j, double a2, double tol) {
  if (a2 == 0.0) {
    return j == 0 ? 1.0 : 0.0;
  }
  double term = 1.0;
  for (int k = 1; k <= j; ++k) {
    term *= a2 / k;
  }
  double sum = 0.0;
  for (int r = 0; r < 100000; ++r) {
    sum += term;
    if (term == 0.0) {
      return sum;
    }
    double next = term;
    for (int k = n * r + j + 1; k <= n * (r + 1) + j; ++k) {
      next *= a2 / k;
    }
    if (next < term && next <= tol * sum) {
      return sum;
    }
    term = next;
  }
  throw SolverFailure("eigenvalue series did not converge");
}

}  // namespace

SymmetricCoherentSet::SymmetricCoherentSet(int n, double amplitude)
    : n_(n), amplitude_(amplitude) {
  if (n < 2) {
    throw std::invalid_argument("symmetric set needs at least 2 states");
  }
  if (!(amplitude >= 0.0)) {
    throw std::invalid_argument("amplitude must be a nonnegative real");
  }
}

double SymmetricCoherentSet::phase(int k) const { return kTwoPi * k / n_; }

Complex SymmetricCoherentSet::member(int k) const {
  return std::polar(amplitude_, phase(k));
}

Spectrum::Spectrum(std::vector<double> values) : values_(std::move(values)) {
  if (values_.empty()) {
    throw InvalidSpectrum("spectrum must not be empty");
  }
  for (size_t j = 0; j < values_.size(); ++j) {
    if (values_[j] < -kNegativeEigenvalueTol) {
      std::ostringstream msg;
      msg << "component " << j << " = " << values_[j]
          << " violates positive semi-definiteness";
      throw InvalidSpectrum(msg.str());
    }
    if (values_[j] < 0.0) {
      values_[j] = 0.0;
    }
  }
  const double total = std::accumulate(values_.begin(), values_.end(), 0.0);
  if (std::abs(total - static_cast<double>(values_.size())) > kSpectrumSumTol) {
    std::ostringstream msg;
    msg << "spectrum sums to " << total << ", expected " << values_.size();
    throw InvalidSpectrum(msg.str());
  }
}

Spectrum Spectrum::point_mass(int n, int shift) {
  if (n < 1 || shift < 0 || shift >= n) {
    throw std::invalid_argument("point mass shift out of range");
  }
  std::vector<double> v(static_cast<size_t>(n), 0.0);
  v[static_cast<size_t>(shift)] = static_cast<double>(n);
  return Spectrum(std::move(v));
}

double Spectrum::sum() const {
  return std::accumulate(values_.begin(), values_.end(), 0.0);
}

double Spectrum::min() const {
  return *std::min_element(values_.begin(), values_.end());
}

int Spectrum::argmin() const {
  return static_cast<int>(
      std::min_element(values_.begin(), values_.end()) - values_.begin());
}

GramMatrix::GramMatrix(int n, std::vector<Complex> entries)
    : n_(n), entries_(std::move(entries)) {
  if (n < 1 || entries_.size() != static_cast<size_t>(n) * n) {
    throw std::invalid_argument("gram matrix entries must be n x n");
  }
  for (int i = 0; i < n_; ++i) {
    if (entry(i, i) != Complex(1.0, 0.0)) {
      throw std::invalid_argument("gram diagonal entries must equal 1 exactly");
    }
    for (int j = i + 1; j < n_; ++j) {
      if (std::abs(entry(i, j) - std::conj(entry(j, i))) > 1e-12) {
        throw std::invalid_argument("gram matrix must be Hermitian");
      }
    }
  }
}

std::vector<Complex> GramMatrix::first_row() const {
  return {entries_.begin(), entries_.begin() + n_};
}

double GramMatrix::circulant_residue() const {
  double residue = 0.0;
  for (int i = 0; i < n_; ++i) {
    for (int j = 0; j < n_; ++j) {
      residue = std::max(residue,
                         std::abs(entry(i, j) - entry(0, (j - i + n_) % n_)));
    }
  }
  return residue;
}

Complex overlap(Complex a, Complex b) {
  return std::exp(-0.5 * std::norm(a) - 0.5 * std::norm(b) +
                  std::conj(a) * b);
}

GramMatrix gram_matrix(const SymmetricCoherentSet& set) {
  const int n = set.size();
  // First row c_l = <alpha | alpha w^l>; the lower half mirrors by
  // conjugation so the matrix is Hermitian and circulant bit-exactly.
  std::vector<Complex> row(static_cast<size_t>(n));
  row[0] = Complex(1.0, 0.0);
  for (int l = 1; l <= n / 2; ++l) {
    Complex value = overlap(set.member(0), set.member(l));
    if (2 * l == n) {
      // <alpha|-alpha> is real for a real amplitude; drop the angle round-off.
      value = Complex(value.real(), 0.0);
    }
    row[static_cast<size_t>(l)] = value;
    row[static_cast<size_t>(n - l)] = std::conj(value);
  }
  std::vector<Complex> entries(static_cast<size_t>(n) * n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      entries[static_cast<size_t>(i) * n + j] = row[static_cast<size_t>((j - i + n) % n)];
    }
  }
  GramMatrix g(n, std::move(entries));
  // Positive semi-definiteness check; Spectrum construction rejects
  // eigenvalues below the clamp window.
  spectrum_closed(set);
  return g;
}

Spectrum spectrum_series(const SymmetricCoherentSet& set,
                         double terms_tolerance) {
  if (!(terms_tolerance > 0.0)) {
    throw std::invalid_argument("terms_tolerance must be positive");
  }
  const int n = set.size();
  const double a2 = set.amplitude() * set.amplitude();
  const double prefactor = std::exp(-a2) * n;
  std::vector<double> values(static_cast<size_t>(n));
  for (int j = 0; j < n; ++j) {
    values[static_cast<size_t>(j)] =
        prefactor * collected_exp_series(n, j, a2, terms_tolerance);
  }
  return Spectrum(std::move(values));
}

Spectrum spectrum_closed(const SymmetricCoherentSet& set) {
  const int n = set.size();
  const double a2 = set.amplitude() * set.amplitude();
  const std::vector<Complex> roots = unit_roots(n);
  std::vector<Complex> row(static_cast<size_t>(n));
  for (int l = 0; l < n; ++l) {
    row[static_cast<size_t>(l)] =
        std::exp(-a2 * (Complex(1.0, 0.0) - roots[static_cast<size_t>(l)]));
  }
  std::vector<double> values(static_cast<size_t>(n));
  for (int j = 0; j < n; ++j) {
    Complex lambda(0.0, 0.0);
    for (int l = 0; l < n; ++l) {
      lambda += std::conj(roots[static_cast<size_t>((j * l) % n)]) *
                row[static_cast<size_t>(l)];
    }
    if (std::abs(lambda.imag()) > kImagResidueLimit) {
      std::ostringstream msg;
      msg << "Im lambda_" << j << " = " << lambda.imag();
      throw ImaginaryResidueTooLarge(msg.str());
    }
    values[static_cast<size_t>(j)] = lambda.real();
  }
  return Spectrum(std::move(values));
}

}  // namespace symamp
