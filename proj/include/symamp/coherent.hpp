#pragma once

// Coherent-state arithmetic for symmetric sets |alpha e^{2 pi i k/n}>.
//
// Conventions used throughout the library:
//   overlap(a, b) = exp(-|a|^2/2 - |b|^2/2 + conj(a) b)
//   spectrum index j is uDFT order:
//     lambda_j = sum_{l=0}^{n-1} w^{-jl} <alpha | alpha w^l>,  w = e^{2 pi i/n}.
//   Eigenvalues are never sorted numerically; the index order is load-bearing
//   for the ordering and quotient properties checked in the spectral module.
// Valid spectra are nonnegative and sum to n (the Gram trace).

#include <complex>
#include <vector>

#include "symamp/errors.hpp"

namespace symamp {

using Complex = std::complex<double>;

// Eigenvalues in [-kNegativeEigenvalueTol, 0) clamp to zero; anything more
// negative is a genuine positive-semidefiniteness violation.
inline constexpr double kNegativeEigenvalueTol = 1e-10;
inline constexpr double kSpectrumSumTol = 1e-9;
// Default relative next-term cutoff for eigenvalue series.
inline constexpr double kSeriesCutoff = 1e-16;
inline constexpr double kImagResidueLimit = 1e-8;

// N coherent states alpha e^{i theta_k}, theta_k = 2 pi k / n, alpha real >= 0.
class SymmetricCoherentSet {
 public:
  SymmetricCoherentSet(int n, double amplitude);

  int size() const { return n_; }
  double amplitude() const { return amplitude_; }
  double phase(int k) const;
  Complex member(int k) const;

 private:
  int n_;
  double amplitude_;
};

// Eigenvalue vector of a circulant Gram matrix, in uDFT index order.
// Construction clamps round-off negatives and enforces sum == n.
class Spectrum {
 public:
  explicit Spectrum(std::vector<double> values);

  // n * e_shift, the spectrum of a trivial (fixed-state) leak.
  static Spectrum point_mass(int n, int shift);

  int size() const { return static_cast<int>(values_.size()); }
  double operator[](int j) const { return values_[static_cast<size_t>(j)]; }
  const std::vector<double>& values() const { return values_; }

  double sum() const;
  double min() const;
  int argmin() const;

 private:
  std::vector<double> values_;
};

// Hermitian matrix of pairwise overlaps with unit diagonal. Circulant when
// built from a SymmetricCoherentSet.
class GramMatrix {
 public:
  GramMatrix(int n, std::vector<Complex> entries);

  int size() const { return n_; }
  Complex entry(int i, int j) const {
    return entries_[static_cast<size_t>(i) * n_ + j];
  }
  std::vector<Complex> first_row() const;
  double circulant_residue() const;
  bool is_circulant(double tol = 1e-12) const {
    return circulant_residue() <= tol;
  }

 private:
  int n_;
  std::vector<Complex> entries_;
};

Complex overlap(Complex a, Complex b);

GramMatrix gram_matrix(const SymmetricCoherentSet& set);

// lambda_j = e^{-alpha^2} n sum_r alpha^{2(nr+j)} / (nr+j)!, truncated when
// the next term drops below terms_tolerance times the partial sum.
Spectrum spectrum_series(const SymmetricCoherentSet& set,
                         double terms_tolerance = kSeriesCutoff);

// Finite sum lambda_j = sum_l w^{-jl} exp(-alpha^2 (1 - w^l)).
// Throws ImaginaryResidueTooLarge if any |Im lambda_j| > 1e-8.
Spectrum spectrum_closed(const SymmetricCoherentSet& set);

}  // namespace symamp
