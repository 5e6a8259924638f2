#pragma once

// Circulant/uDFT machinery: diagonalization, circular convolution, spectrum
// validity, and numerical spot checks of the spectral ordering, quotient and
// log-concavity properties.

#include <optional>
#include <utility>
#include <vector>

#include "symamp/coherent.hpp"

namespace symamp {

// Unitary discrete Fourier matrix, entry(p, q) = exp(-2 pi i p q / n)/sqrt(n)
// for 0-based p, q.
class UnitaryDft {
 public:
  explicit UnitaryDft(int n);

  int size() const { return n_; }
  Complex entry(int p, int q) const {
    return entries_[static_cast<size_t>(p) * n_ + q];
  }
  // max |(F^dagger F - I)_{pq}|
  double unitarity_residue() const;

 private:
  int n_;
  std::vector<Complex> entries_;
};

struct PropertyWitness {
  int index = 0;
  std::vector<double> parameters;
};

// Result of a grid check: holds iff no witness; margin is the smallest slack
// seen (+inf when the check was vacuous).
struct PropertyReport {
  bool holds = true;
  std::optional<PropertyWitness> witness;
  double margin = 0.0;
};

// Diagonal of uDFT^dagger . g . uDFT as a Spectrum. Throws NotCirculant if
// the conjugated matrix has off-diagonal residue above 1e-8.
Spectrum diagonalize_circulant(const GramMatrix& g);

// (u * v)_i = (1/n) sum_j u_j v_{(n-j+i) mod n}. No spectrum validation.
std::vector<double> circular_convolve_raw(const std::vector<double>& u,
                                          const std::vector<double>& v);

Spectrum circular_convolve(const Spectrum& u, const Spectrum& v);

// True iff all components >= -1e-10 and the sum equals the length within 1e-9.
bool is_valid_spectrum(const std::vector<double>& v);

// lambda_j >= lambda_{j+1} at every grid amplitude.
PropertyReport check_property1(int n, const std::vector<double>& amplitude_grid);

// lambda_j(alpha)/lambda_j(beta) >= lambda_{n-1}(alpha)/lambda_{n-1}(beta)
// at every grid pair; pairs must satisfy 0 < alpha < beta.
PropertyReport check_property2(
    int n, const std::vector<std::pair<double, double>>& pair_grid);

// Concavity of log f_j, f_j(x) = sum_r x^{nr+j}/(nr+j)!, via second central
// differences on a uniform grid (raw differences <= 1e-9 pass).
PropertyReport check_logconcavity(int n, int j, const std::vector<double>& grid);

}  // namespace symamp
