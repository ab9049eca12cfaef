#include "mlde2/cli.hpp"

#include <complex>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "mlde2/forms.hpp"
#include "mlde2/hypergeom.hpp"
#include "mlde2/mlde.hpp"
#include "mlde2/report.hpp"
#include "mlde2/smatrix.hpp"

namespace mlde2 {

namespace {

using ordered_json = nlohmann::ordered_json;

ordered_json series_json(const QSeries& f) {
  ordered_json coeffs = ordered_json::array();
  for (std::size_t n = 0; n < f.terms(); ++n) coeffs.push_back(f[n].str());
  return {{"exponent", f.exponent().str()}, {"coefficients", coeffs}};
}

std::string series_pretty(const QSeries& f, std::size_t max_terms = 0) {
  std::ostringstream os;
  const std::size_t n = max_terms == 0 ? f.terms() : std::min(max_terms, f.terms());
  os << "q^(" << f.exponent().str() << ") * (";
  bool first = true;
  for (std::size_t k = 0; k < n; ++k) {
    if (f[k].is_zero() && !(first && k + 1 == n)) continue;
    const Rational v = f[k];
    if (first) {
      os << v.str();
      first = false;
    } else {
      os << (v.sign() < 0 ? " - " : " + ") << v.abs().str();
    }
    if (k > 0) os << (k == 1 ? "*q" : "*q^" + std::to_string(k));
  }
  if (first) os << "0";
  os << " + O(q^" << n << "))";
  return os.str();
}

ordered_json complex_json(const Complex& z) {
  return {{"re", z.real()}, {"im", z.imag()}};
}

void emit(const std::string& text, const std::string& out_path, std::ostream& out) {
  if (out_path.empty()) {
    out << text;
    return;
  }
  std::ofstream file(out_path);
  if (!file) throw std::runtime_error("cannot open output file " + out_path);
  file << text;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact q-series engine for the monic order-2 modular linear "
               "differential equation and its character classification"};
  app.require_subcommand(1);

  std::size_t terms = 64;
  std::string format = "md";
  std::string out_path;
  double tolerance = 1e-6;
  app.add_option("--terms", terms, "number of stored q-coefficients")->capture_default_str();
  app.add_option("--format", format, "output format: md, json or csv")
      ->check(CLI::IsMember({"md", "json", "csv"}))
      ->capture_default_str();
  app.add_option("--out", out_path, "write output to a file instead of stdout");

  auto* forms_cmd = app.add_subcommand("forms", "q-expansion of a catalog modular form");
  std::string form_name;
  forms_cmd->add_option("name", form_name, "one of E2,E4,E6,Delta,j,K,eta,Delta3,I3")
      ->required();

  auto* mlde_cmd = app.add_subcommand("mlde", "Frobenius solutions for a given k1");
  std::string k1_text;
  mlde_cmd->add_option("--k1", k1_text, "parameter k1 as P/Q")->required();

  auto* char_cmd = app.add_subcommand("character", "hypergeometric character for a leading exponent");
  std::string a_text;
  char_cmd->add_option("--a", a_text, "indicial root a as P/Q")->required();

  auto* classify_cmd = app.add_subcommand("classify", "full classification report");

  auto* smatrix_cmd = app.add_subcommand("smatrix", "numeric S-matrix for a residual case");
  int smatrix_c = 0;
  smatrix_cmd->add_option("--c", smatrix_c, "central charge: -6, -8 or -10")->required();
  smatrix_cmd->add_option("--tolerance", tolerance, "numeric comparison tolerance")
      ->capture_default_str();

  auto* tables_cmd = app.add_subcommand("tables", "reproduced table with erratum annotations");
  int which_table = 0;
  tables_cmd->add_option("--which", which_table, "table number 1..5")
      ->check(CLI::Range(1, 5))
      ->required();

  // Global options (--terms, --format, --out) also parse after a subcommand.
  for (auto* sub : app.get_subcommands({})) sub->fallthrough();

  std::vector<const char*> argv;
  argv.push_back("mlde2");
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    std::ostringstream os;
    const int code = app.exit(e, os, os);
    (code == 0 ? out : err) << os.str();
    return code;
  }

  try {
    if (*forms_cmd) {
      if (terms < 2) throw std::invalid_argument("--terms below minimum (2)");
      const QSeries f = form_by_name(form_name, terms);
      if (format == "json") {
        ordered_json j{{"name", form_name}};
        for (const auto& info : form_catalog()) {
          if (info.name == form_name) {
            j["weight"] = info.weight.str();
            j["level"] = info.level;
          }
        }
        j.update(series_json(f));
        emit(j.dump(2) + "\n", out_path, out);
      } else {
        emit(form_name + " = " + series_pretty(f) + "\n", out_path, out);
      }
      return 0;
    }

    if (*mlde_cmd) {
      if (terms < 2) throw std::invalid_argument("--terms below minimum (2)");
      const Rational k1 = Rational::parse(k1_text);
      const IndicialRoots roots = indicial_roots(k1);
      const QSeries f1 = frobenius_solve(k1, roots.upper, terms);
      const QSeries f2 = frobenius_solve(k1, roots.lower, terms);
      const bool zero1 = mlde_residual(f1, k1).is_zero();
      const bool zero2 = mlde_residual(f2, k1).is_zero();
      if (format == "json") {
        const ordered_json j{{"k1", k1.str()},
                             {"indicial_roots", {roots.lower.str(), roots.upper.str()}},
                             {"solutions", {series_json(f1), series_json(f2)}},
                             {"residuals_vanish", zero1 && zero2}};
        emit(j.dump(2) + "\n", out_path, out);
      } else {
        std::ostringstream os;
        os << "k1 = " << k1 << ", indicial roots {" << roots.lower << ", " << roots.upper
           << "}\n";
        os << "f(" << roots.upper << ") = " << series_pretty(f1, 12) << "\n";
        os << "f(" << roots.lower << ") = " << series_pretty(f2, 12) << "\n";
        os << "residuals vanish: " << (zero1 && zero2 ? "yes" : "no") << "\n";
        emit(os.str(), out_path, out);
      }
      return zero1 && zero2 ? 0 : 1;
    }

    if (*char_cmd) {
      if (terms < 2) throw std::invalid_argument("--terms below minimum (2)");
      const Rational a = Rational::parse(a_text);
      const QSeries f = character_series(a, terms);
      if (format == "json") {
        ordered_json j{{"a", a.str()}};
        j.update(series_json(f));
        emit(j.dump(2) + "\n", out_path, out);
      } else {
        emit("f = " + series_pretty(f) + "\n", out_path, out);
      }
      return 0;
    }

    if (*classify_cmd) {
      if (terms < 10) throw std::invalid_argument("--terms below minimum (10) for classify");
      const Report report = build_report(terms);
      emit(report_to_string(report, format), out_path, out);
      return 0;
    }

    if (*smatrix_cmd) {
      if (smatrix_c != -6 && smatrix_c != -8 && smatrix_c != -10) {
        throw std::invalid_argument("smatrix supports only c in {-6, -8, -10}");
      }
      const std::size_t depth = std::max<std::size_t>(terms, 192);
      const CaseResult result = verify_case(smatrix_c, depth, tolerance);
      if (format == "json") {
        ordered_json entries = ordered_json::array();
        for (int r = 0; r < 2; ++r) {
          entries.push_back({complex_json(result.s.entries[r][0]),
                             complex_json(result.s.entries[r][1])});
        }
        ordered_json errata = ordered_json::array();
        for (const auto& e : result.forms.errata) {
          errata.push_back({{"component", e.component},
                            {"printed", e.printed},
                            {"certified", e.certified}});
        }
        for (const auto& e : result.matrix_errata) {
          errata.push_back({{"entry", e.entry},
                            {"printed", complex_json(e.printed)},
                            {"certified", complex_json(e.certified)}});
        }
        const ordered_json j{{"c", result.c},
                             {"a", result.a.str()},
                             {"b", result.b.str()},
                             {"k1", result.k1.str()},
                             {"entries", entries},
                             {"fit_residual", result.s.fit_residual},
                             {"witness_ratio", complex_json(result.s.witness_ratio)},
                             {"symmetrizable", result.s.symmetrizable},
                             {"symmetrizability_margin", result.s.symmetrizability_margin},
                             {"errata", errata}};
        emit(j.dump(2) + "\n", out_path, out);
      } else {
        std::ostringstream os;
        os << "c = " << result.c << ": F(-1/tau) = M F(tau) with\n";
        for (int r = 0; r < 2; ++r) {
          os << "  [ ";
          for (int q = 0; q < 2; ++q) {
            const Complex z = result.s.entries[r][q];
            os << z.real() << (z.imag() >= 0 ? "+" : "") << z.imag() << "i ";
          }
          os << "]\n";
        }
        os << "fit residual " << result.s.fit_residual << ", S12/S21 = "
           << result.s.witness_ratio.real() << ", symmetrizable: "
           << (result.s.symmetrizable ? "yes" : "no") << "\n";
        for (const auto& e : result.forms.errata) {
          os << "erratum (" << e.component << "): printed " << e.printed
             << ", certified " << e.certified << "\n";
        }
        for (const auto& e : result.matrix_errata) {
          os << "erratum (" << e.entry << "): printed " << e.printed.real()
             << ", certified " << e.certified.real() << "\n";
        }
        emit(os.str(), out_path, out);
      }
      return result.s.symmetrizable ? 1 : 0;
    }

    if (*tables_cmd) {
      if (terms < 10) throw std::invalid_argument("--terms below minimum (10) for tables");
      const Report report = build_report(terms);
      emit(table_to_string(report, which_table, format), out_path, out);
      return 0;
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  err << "error: no subcommand selected\n";
  return 1;
}

}  // namespace mlde2
