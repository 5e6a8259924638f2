#include "symamp/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace symamp {

namespace {

constexpr double kOrderingSlackTol = 0.0;       // property 1/2 violations
constexpr double kLogConcavityTol = 1e-9;       // raw second differences

// f_j(x) = sum_r x^{nr+j} / (nr+j)!, the every-n-th subseries of e^x.
double fock_subseries(int n, int j, double x) {
  if (x == 0.0) {
    return j == 0 ? 1.0 : 0.0;
  }
  double term = 1.0;
  for (int k = 1; k <= j; ++k) {
    term *= x / k;
  }
  double sum = 0.0;
  for (int r = 0; r < 100000; ++r) {
    sum += term;
    if (term == 0.0) {
      return sum;
    }
    double next = term;
    for (int k = n * r + j + 1; k <= n * (r + 1) + j; ++k) {
      next *= x / k;
    }
    if (next < term && next <= 1e-16 * sum) {
      return sum;
    }
    term = next;
  }
  throw SolverFailure("subseries did not converge");
}

}  // namespace

UnitaryDft::UnitaryDft(int n) : n_(n), entries_(static_cast<size_t>(n) * n) {
  if (n < 1) {
    throw std::invalid_argument("uDFT dimension must be positive");
  }
  const double scale = 1.0 / std::sqrt(static_cast<double>(n));
  for (int p = 0; p < n; ++p) {
    for (int q = 0; q < n; ++q) {
      const double angle =
          -2.0 * std::numbers::pi * ((static_cast<long long>(p) * q) % n) / n;
      entries_[static_cast<size_t>(p) * n + q] = scale * std::polar(1.0, angle);
    }
  }
}

double UnitaryDft::unitarity_residue() const {
  double residue = 0.0;
  for (int p = 0; p < n_; ++p) {
    for (int q = 0; q < n_; ++q) {
      Complex dot(0.0, 0.0);
      for (int k = 0; k < n_; ++k) {
        dot += std::conj(entry(k, p)) * entry(k, q);
      }
      const Complex expected = p == q ? Complex(1.0, 0.0) : Complex(0.0, 0.0);
      residue = std::max(residue, std::abs(dot - expected));
    }
  }
  return residue;
}

Spectrum diagonalize_circulant(const GramMatrix& g) {
  const int n = g.size();
  const UnitaryDft dft(n);
  // M = F^dagger G F, column by column.
  std::vector<Complex> gf(static_cast<size_t>(n) * n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      Complex acc(0.0, 0.0);
      for (int k = 0; k < n; ++k) {
        acc += g.entry(i, k) * dft.entry(k, j);
      }
      gf[static_cast<size_t>(i) * n + j] = acc;
    }
  }
  std::vector<double> diag(static_cast<size_t>(n));
  double off_residue = 0.0;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      Complex acc(0.0, 0.0);
      for (int k = 0; k < n; ++k) {
        acc += std::conj(dft.entry(k, i)) * gf[static_cast<size_t>(k) * n + j];
      }
      if (i == j) {
        diag[static_cast<size_t>(i)] = acc.real();
      } else {
        off_residue = std::max(off_residue, std::abs(acc));
      }
    }
  }
  if (off_residue > 1e-8) {
    std::ostringstream msg;
    msg << "off-diagonal residue " << off_residue
        << " after uDFT conjugation; matrix is not circulant";
    throw NotCirculant(msg.str());
  }
  return Spectrum(std::move(diag));
}

std::vector<double> circular_convolve_raw(const std::vector<double>& u,
                                          const std::vector<double>& v) {
  if (u.size() != v.size()) {
    throw LengthMismatch("convolution operands differ in length");
  }
  const int n = static_cast<int>(u.size());
  std::vector<double> out(static_cast<size_t>(n), 0.0);
  for (int i = 0; i < n; ++i) {
    double acc = 0.0;
    for (int j = 0; j < n; ++j) {
      acc += u[static_cast<size_t>(j)] * v[static_cast<size_t>((n - j + i) % n)];
    }
    out[static_cast<size_t>(i)] = acc / n;
  }
  return out;
}

Spectrum circular_convolve(const Spectrum& u, const Spectrum& v) {
  return Spectrum(circular_convolve_raw(u.values(), v.values()));
}

bool is_valid_spectrum(const std::vector<double>& v) {
  if (v.empty()) {
    return false;
  }
  for (double x : v) {
    if (x < -kNegativeEigenvalueTol) {
      return false;
    }
  }
  const double total = std::accumulate(v.begin(), v.end(), 0.0);
  return std::abs(total - static_cast<double>(v.size())) <= kSpectrumSumTol;
}

PropertyReport check_property1(int n,
                               const std::vector<double>& amplitude_grid) {
  PropertyReport report;
  report.margin = std::numeric_limits<double>::infinity();
  for (double amplitude : amplitude_grid) {
    if (!(amplitude > 0.0)) {
      throw std::invalid_argument("grid amplitudes must be positive");
    }
    const Spectrum spectrum = spectrum_series({n, amplitude});
    for (int j = 0; j + 1 < n; ++j) {
      const double slack = spectrum[j] - spectrum[j + 1];
      report.margin = std::min(report.margin, slack);
      if (slack < kOrderingSlackTol && !report.witness) {
        report.holds = false;
        report.witness = PropertyWitness{j, {amplitude}};
      }
    }
  }
  return report;
}

PropertyReport check_property2(
    int n, const std::vector<std::pair<double, double>>& pair_grid) {
  PropertyReport report;
  report.margin = std::numeric_limits<double>::infinity();
  for (const auto& [alpha, beta] : pair_grid) {
    if (!(alpha > 0.0) || !(beta > alpha)) {
      throw std::invalid_argument(
          "pair grid requires 0 < alpha < beta (degenerate pair rejected)");
    }
    const Spectrum sa = spectrum_series({n, alpha});
    const Spectrum sb = spectrum_series({n, beta});
    const double last_quotient = sa[n - 1] / sb[n - 1];
    for (int j = 0; j + 1 < n; ++j) {
      const double slack = sa[j] / sb[j] - last_quotient;
      report.margin = std::min(report.margin, slack);
      if (slack < kOrderingSlackTol && !report.witness) {
        report.holds = false;
        report.witness = PropertyWitness{j, {alpha, beta}};
      }
    }
  }
  return report;
}

PropertyReport check_logconcavity(int n, int j,
                                  const std::vector<double>& grid) {
  if (j < 1 || j > n - 1) {
    throw std::invalid_argument("subseries index must lie in [1, n-1]");
  }
  PropertyReport report;
  report.margin = std::numeric_limits<double>::infinity();
  if (grid.size() < 3) {
    return report;  // no interior second difference; vacuously true
  }
  std::vector<double> logf(grid.size());
  for (size_t k = 0; k < grid.size(); ++k) {
    if (!(grid[k] > 0.0)) {
      throw std::invalid_argument("grid points must be positive");
    }
    logf[k] = std::log(fock_subseries(n, j, grid[k]));
  }
  for (size_t k = 1; k + 1 < grid.size(); ++k) {
    const double second = logf[k - 1] - 2.0 * logf[k] + logf[k + 1];
    const double slack = -second;
    report.margin = std::min(report.margin, slack);
    if (second > kLogConcavityTol && !report.witness) {
      report.holds = false;
      report.witness = PropertyWitness{j, {grid[k]}};
    }
  }
  return report;
}

}  // namespace symamp
