#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "mlde2/classify.hpp"
#include "mlde2/forms.hpp"
#include "mlde2/hypergeom.hpp"
#include "mlde2/mlde.hpp"
#include "mlde2/report.hpp"
#include "mlde2/smatrix.hpp"

namespace py = pybind11;
using namespace mlde2;

namespace {

std::vector<std::string> coeff_strings(const QSeries& f) {
  std::vector<std::string> out;
  out.reserve(f.terms());
  for (std::size_t n = 0; n < f.terms(); ++n) out.push_back(f[n].str());
  return out;
}

py::dict series_dict(const QSeries& f) {
  py::dict d;
  d["exponent"] = f.exponent().str();
  d["coefficients"] = coeff_strings(f);
  return d;
}

py::dict candidate_dict(const Candidate& cand) {
  py::dict d;
  d["s"] = cand.s;
  d["m"] = cand.m;
  d["c"] = cand.c.str();
  d["a"] = cand.a.str();
  d["b"] = cand.b.str();
  d["h"] = cand.h.str();
  d["c_tilde"] = cand.c_tilde.str();
  d["k1"] = cand.k1.str();
  d["verdict"] = std::string(verdict_name(cand.verdict));
  if (cand.verdict == Verdict::Identified) d["identified_as"] = cand.identified_as;
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact q-series engine for the monic order-2 modular linear "
            "differential equation and its character classification";

  m.def(
      "form",
      [](const std::string& name, std::size_t terms) {
        return series_dict(form_by_name(name, terms));
      },
      py::arg("name"), py::arg("terms") = 64,
      "q-expansion of a catalog form (E2, E4, E6, Delta, j, K, eta, Delta3, I3)");

  m.def(
      "character",
      [](const std::string& a, std::size_t terms) {
        return series_dict(character_series(Rational::parse(a), terms));
      },
      py::arg("a"), py::arg("terms") = 64,
      "normalized character K^a 2F1(a, a+1/3, 2a+5/6; K) as a q-expansion");

  m.def(
      "frobenius",
      [](const std::string& k1, const std::string& root, std::size_t terms) {
        return series_dict(frobenius_solve(Rational::parse(k1), Rational::parse(root), terms));
      },
      py::arg("k1"), py::arg("root"), py::arg("terms") = 64,
      "normalized Frobenius solution of theta^2 f - (1/6) E2 theta f - k1 E4 f = 0");

  m.def(
      "indicial_roots",
      [](const std::string& k1) {
        const auto roots = indicial_roots(Rational::parse(k1));
        return py::make_tuple(roots.lower.str(), roots.upper.str());
      },
      py::arg("k1"), "roots of x^2 - x/6 - k1 = 0");

  m.def("pythagorean_pairs", &pythagorean_pairs,
        "all nonnegative (s, m) with s^2 + 120^2 = (m + 122)^2, sorted by m");

  m.def(
      "reductive_enumerate",
      [](unsigned dim, unsigned max_rank) {
        std::vector<std::string> out;
        for (const auto& sol : reductive_enumerate(dim, max_rank)) out.push_back(sol.str());
        return out;
      },
      py::arg("dimension"), py::arg("max_rank"),
      "reductive Lie algebras of the exact dimension with rank <= max_rank");

  m.def(
      "discrete_series_witness",
      [](const std::string& c) -> py::object {
        const auto w = discrete_series_witness(Rational::parse(c));
        if (!w) return py::none();
        return py::make_tuple(w->first, w->second);
      },
      py::arg("c"), "coprime (p, q) with c = 1 - 6(p-q)^2/(pq), or None");

  m.def(
      "classify",
      [](std::size_t terms) {
        py::list out;
        for (const auto& cand : classify({.filter_terms = terms})) {
          out.append(candidate_dict(cand));
        }
        return out;
      },
      py::arg("terms") = 32, "all 44 candidates with final verdicts");

  m.def(
      "classify_report",
      [](std::size_t terms, const std::string& format) {
        return report_to_string(build_report(terms), format);
      },
      py::arg("terms") = 32, py::arg("format") = "json",
      "full report with reproduced tables and errata");

  m.def(
      "smatrix",
      [](int c, std::size_t terms, double tolerance) {
        const CaseResult result = verify_case(c, terms, tolerance);
        py::dict d;
        d["c"] = result.c;
        d["a"] = result.a.str();
        d["b"] = result.b.str();
        std::vector<std::vector<Complex>> entries(2);
        for (int r = 0; r < 2; ++r) {
          entries[r] = {result.s.entries[r][0], result.s.entries[r][1]};
        }
        d["entries"] = entries;
        d["fit_residual"] = result.s.fit_residual;
        d["witness_ratio"] = result.s.witness_ratio;
        d["symmetrizable"] = result.s.symmetrizable;
        py::list errata;
        for (const auto& e : result.forms.errata) {
          py::dict item;
          item["component"] = e.component;
          item["printed"] = e.printed;
          item["certified"] = e.certified;
          errata.append(item);
        }
        for (const auto& e : result.matrix_errata) {
          py::dict item;
          item["entry"] = e.entry;
          item["printed"] = e.printed;
          item["certified"] = e.certified;
          errata.append(item);
        }
        d["errata"] = errata;
        return d;
      },
      py::arg("c"), py::arg("terms") = 192, py::arg("tolerance") = 1e-6,
      "numeric S-matrix verification for c in {-6, -8, -10}");

  m.attr("__version__") = "0.1.0";
}
