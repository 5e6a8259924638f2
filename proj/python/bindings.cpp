#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <string>
#include <vector>

#include "symamp/coherent.hpp"
#include "symamp/optics.hpp"
#include "symamp/spectral.hpp"
#include "symamp/transform.hpp"

namespace py = pybind11;

namespace {

using namespace symamp;

std::vector<std::vector<Complex>> gram_entries(int n, double alpha) {
  const GramMatrix g = gram_matrix(SymmetricCoherentSet(n, alpha));
  std::vector<std::vector<Complex>> rows(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) {
    rows[static_cast<size_t>(i)].resize(static_cast<size_t>(n));
    for (int j = 0; j < n; ++j) {
      rows[static_cast<size_t>(i)][static_cast<size_t>(j)] = g.entry(i, j);
    }
  }
  return rows;
}

std::vector<double> spectrum_values(int n, double alpha,
                                    const std::string& method) {
  const SymmetricCoherentSet set(n, alpha);
  if (method == "series") {
    return spectrum_series(set).values();
  }
  if (method == "closed") {
    return spectrum_closed(set).values();
  }
  if (method == "diagonalize") {
    return diagonalize_circulant(gram_matrix(set)).values();
  }
  throw std::invalid_argument("method must be series, closed or diagonalize");
}

py::dict plan_dict(const TransformPlan& plan) {
  py::dict d;
  d["p"] = plan.p;
  d["mode"] = std::string(to_string(plan.mode));
  d["leak"] = plan.leak.values();
  if (plan.redundancy) {
    d["redundancy"] = plan.redundancy->values();
  } else {
    d["redundancy"] = py::none();
  }
  if (plan.shift) {
    d["shift"] = *plan.shift;
  } else {
    d["shift"] = py::none();
  }
  return d;
}

py::dict report_dict(const PropertyReport& report) {
  py::dict d;
  d["holds"] = report.holds;
  d["margin"] = report.margin;
  if (report.witness) {
    py::dict w;
    w["index"] = report.witness->index;
    w["parameters"] = report.witness->parameters;
    d["witness"] = w;
  } else {
    d["witness"] = py::none();
  }
  return d;
}

py::dict sim_dict(const optics::SimReport& report) {
  py::dict d;
  d["trials"] = report.trials;
  d["success_count"] = report.success_count;
  d["wrong_count"] = report.wrong_count;
  d["empirical_rate"] = report.empirical_rate;
  d["ci_halfwidth"] = report.ci_halfwidth;
  d["seed"] = report.seed;
  d["rng"] = report.rng;
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() =
      "Optimal success probabilities, transform plans and linear-optics "
      "simulation for perfect amplification of symmetric coherent-state sets";

  m.def("overlap", &overlap, py::arg("a"), py::arg("b"),
        "Coherent-state inner product exp(-|a|^2/2 - |b|^2/2 + conj(a) b)");
  m.def("gram", &gram_entries, py::arg("n"), py::arg("alpha"),
        "Circulant Gram matrix of the symmetric set as nested lists");
  m.def("spectrum", &spectrum_values, py::arg("n"), py::arg("alpha"),
        py::arg("method") = "series",
        "Gram eigenvalues in uDFT order; method: series, closed, diagonalize");
  m.def(
      "circular_convolve",
      [](const std::vector<double>& u, const std::vector<double>& v) {
        return circular_convolve_raw(u, v);
      },
      py::arg("u"), py::arg("v"),
      "(u * v)_i = (1/n) sum_j u_j v_{(n-j+i) mod n}");
  m.def("is_valid_spectrum", &is_valid_spectrum, py::arg("values"));

  m.def(
      "usd_success",
      [](int n, double alpha) {
        return usd_success(SymmetricCoherentSet(n, alpha));
      },
      py::arg("n"), py::arg("alpha"),
      "Optimal unambiguous-discrimination success probability");
  m.def(
      "upper_bound",
      [](int n, double alpha, double beta) {
        return upper_bound(AmplificationRequest(n, alpha, beta));
      },
      py::arg("n"), py::arg("alpha"), py::arg("beta"));
  m.def(
      "leakless_optimum",
      [](int n, double alpha, double beta) {
        return plan_dict(leakless_optimum(AmplificationRequest(n, alpha, beta)));
      },
      py::arg("n"), py::arg("alpha"), py::arg("beta"));
  m.def(
      "leaky_optimum",
      [](int n, double alpha, double beta) {
        return plan_dict(leaky_optimum(AmplificationRequest(n, alpha, beta)));
      },
      py::arg("n"), py::arg("alpha"), py::arg("beta"));
  m.def(
      "redundancy",
      [](const std::vector<double>& lambda_a, const std::vector<double>& lambda_b,
         double p, const std::vector<double>& leak) {
        return redundancy(Spectrum(lambda_a), Spectrum(lambda_b), p,
                          Spectrum(leak))
            .values();
      },
      py::arg("lambda_a"), py::arg("lambda_b"), py::arg("p"), py::arg("leak"));
  m.def(
      "small_amplitude_popt",
      [](int n, double alpha, double beta) {
        return small_amplitude_popt(AmplificationRequest(n, alpha, beta));
      },
      py::arg("n"), py::arg("alpha"), py::arg("beta"));
  m.def(
      "check_lemma1",
      [](int n, double alpha, double beta, int samples, std::uint64_t seed) {
        const Lemma1Report report =
            check_lemma1(AmplificationRequest(n, alpha, beta), samples, seed);
        py::dict d;
        d["min_unique"] = report.min_unique;
        d["best_nontrivial_leaky_p"] = report.best_nontrivial_leaky_p;
        d["p_up"] = report.p_up;
        d["saturates"] = report.saturates;
        return d;
      },
      py::arg("n"), py::arg("alpha"), py::arg("beta"),
      py::arg("samples") = 200, py::arg("seed") = 1);

  m.def(
      "check_property1",
      [](int n, const std::vector<double>& grid) {
        return report_dict(check_property1(n, grid));
      },
      py::arg("n"), py::arg("grid"));
  m.def(
      "check_property2",
      [](int n, const std::vector<std::pair<double, double>>& pairs) {
        return report_dict(check_property2(n, pairs));
      },
      py::arg("n"), py::arg("pairs"));
  m.def(
      "check_logconcavity",
      [](int n, int j, const std::vector<double>& grid) {
        return report_dict(check_logconcavity(n, j, grid));
      },
      py::arg("n"), py::arg("j"), py::arg("grid"));

  m.def(
      "beamsplitter",
      [](Complex a, Complex b) { return optics::beamsplitter(a, b); },
      py::arg("a"), py::arg("b"));
  m.def(
      "displace", [](Complex a, Complex d) { return optics::displace(a, d); },
      py::arg("a"), py::arg("d"));
  m.def(
      "click_probability",
      [](Complex a, double efficiency) {
        return optics::click_probability(a, efficiency);
      },
      py::arg("a"), py::arg("efficiency") = 1.0);
  m.def(
      "monte_carlo",
      [](const std::string& scenario, int n, double alpha, long long trials,
         std::uint64_t seed, double gain, double efficiency) {
        optics::Scenario s;
        s.kind = optics::Scenario::parse_kind(scenario);
        s.n = n;
        s.alpha = alpha;
        s.gain = gain;
        s.efficiency = efficiency;
        py::dict d = sim_dict(optics::monte_carlo(s, trials, seed));
        d["scenario"] = scenario;
        d["analytic_success"] = s.analytic_success();
        return d;
      },
      py::arg("scenario"), py::arg("n"), py::arg("alpha"), py::arg("trials"),
      py::arg("seed") = 1, py::arg("gain") = 1.0, py::arg("efficiency") = 1.0,
      "Seeded Monte-Carlo run; scenario: usd-two, usd-multiport or amplify");

  m.attr("__version__") = "0.1.0";
}
