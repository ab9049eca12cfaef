#include "mlde2/report.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "mlde2/hypergeom.hpp"

namespace mlde2 {

namespace {

using ordered_json = nlohmann::ordered_json;

// ---------------------------------------------------------------------------
// Published table data, kept verbatim for reproduction and erratum detection.

struct PrintedTable1Row {
  const char* type;
  const char* a;
  const char* b;
  const char* c;
};
constexpr PrintedTable1Row kTable1[] = {
    {"A1", "-1/24", "5/24", "1"},     {"A2", "-1/12", "1/4", "2"},
    {"G2", "-7/6", "17/60", "14/5"},  {"D4", "-1/6", "1/3", "4"},
    {"F4", "-13/60", "23/60", "26/5"}, {"E6", "-1/4", "5/12", "6"},
    {"E7", "-7/24", "11/24", "7"},    {"YangLee", "11/60", "-1/60", "-22/5"},
    {"??", "1/4", "-1/12", "-6"},     {"??", "1/3", "-1/6", "-8"},
    {"??", "5/12", "-1/4", "-10"},
};

struct PrintedTable3Row {
  const char* s;
  const char* m;
  const char* c1;
  const char* c2;
  const char* a1;
  const char* a2;
};
constexpr PrintedTable3Row kTable3[] = {
    {"3599", "3479", "-710", "49/5", "355/12", "-49/120"},
    {"896", "782", "-170", "46/5", "85/12", "-23/60"},
    {"391", "287", "-70", "41/5", "35/12", "-41/120"},
    {"209", "119", "-35", "34/5", "35/24", "-17/60"},
    {"119", "47", "-94/5", "5", "47/60", "-5/24"},
    {"64", "14", "-10", "14/5", "5/12", "-7/60"},
    {"1798", "1680", "-350", "48/5", "175/12", "-2/5"},
    {"442", "336", "-80", "42/5", "10/3", "-7/20"},
    {"182", "96", "-30", "32/5", "5/4", "-4/15"},
    {"22", "0", "0", "-22/5", "0", "11/60"},
    {"1197", "1081", "-230", "47/5", "115/12", "-47/120"},
    {"288", "190", "-50", "38/5", "25/12", "-19/60"},
    {"27", "1", "-5", "2/5", "5/24", "-1/60"},
    {"715", "603", "-134", "9", "67/12", "-3/8"},
    {"35", "3", "-6", "1", "1/4", "-1/24"},
    {"594", "484", "-110", "44/5", "55/12", "-11/30"},
    {"126", "52", "-20", "26/5", "5/6", "-13/60"},
    {"350", "248", "-62", "8", "31/12", "-1/3"},
    {"50", "8", "-8", "2", "1/3", "-1/12"},
    {"225", "33", "-38", "7", "19/12", "-7/24"},
    {"160", "78", "-26", "6", "13/12", "-1/4"},
    {"0", "28", "-14", "4", "7/12", "-1/6"},
};

struct PrintedTable4Row {
  const char* a;
  const char* exponent;
  std::vector<const char*> coeffs;
};
const std::vector<PrintedTable4Row>& printed_table4() {
  static const std::vector<PrintedTable4Row> rows = {
      {"35/12", "35/12", {"1", "287", "847903/23"}},
      {"35/24", "35/24", {"1", "119", "113358/19"}},
      {"47/60", "47/60", {"1", "47", "15369/17"}},
      {"5/12", "5/12",
       {"1", "14", "92", "456", "1848", "6580", "21141", "62806", "174777"}},
      {"-7/60", "-7/60",
       {"1", "14", "42", "140", "350", "840", "1827", "3858", "7637"}},
      {"10/3", "10/3",
       {"1", "336", "868136/17", "1541266112/323", "5323642484/17", "264979509920/17"}},
      {"5/4", "5/4", {"1", "96", "49869/13"}},
      {"5/6", "-6/5",
       {"1", "1292", "701246", "207599288", "36592296829", "3988939885028"}},
      {"11/60", "11/60", {"1", "0", "1", "1", "1", "1", "2", "2", "3"}},
      {"-19/60", "-19/60",
       {"1", "190", "2831", "22306", "129276", "611724", "2511667"}},
      {"5/24", "5/24", {"1", "1", "3", "4", "7", "10", "17", "23", "35"}},
      {"-1/60", "-1/60", {"1", "1", "1", "1", "2", "2", "3", "3", "4"}},
      {"1/4", "1/4", {"1", "3", "9", "19", "42", "81", "155", "276", "486"}},
      {"-1/24", "-1/24", {"1", "3", "4", "7", "13", "19", "29", "43", "62"}},
      {"-13/60", "-13/60",
       {"1", "52", "377", "1976", "7852", "27404", "84981", "243230"}},
      {"1/3", "1/3",
       {"1", "8", "36", "128", "394", "1088", "2776", "6656", "15155"}},
      {"-1/12", "-1/12",
       {"1", "8", "17", "46", "98", "198", "371", "692", "1205"}},
      {"-7/24", "-7/24",
       {"1", "133", "1673", "11914", "63252", "278313", "1070006"}},
      {"-1/4", "-1/4",
       {"1", "78", "729", "4382", "19917", "77274", "264664", "827388"}},
      {"-1/6", "-1/6",
       {"1", "28", "134", "568", "1809", "5316", "13990", "34696"}},
  };
  return rows;
}

struct PrintedTable5Row {
  long s;
  long m;
  std::vector<const char*> c, a, b, ct;
};
const std::vector<PrintedTable5Row>& printed_table5() {
  static const std::vector<PrintedTable5Row> rows = {
      {64, 14, {"-10", "14/5"}, {"5/12", "-7/60"}, {"-1/4", "17/60"}, {"6", "14/5"}},
      {22, 0, {"-22/5"}, {"11/60"}, {"-1/60"}, {"2/5"}},
      {288, 190, {"38/5"}, {"-19/60"}, {"29/60"}, {"38/5"}},
      {27, 1, {"-5", "2/5"}, {"5/24", "-1/60"}, {"-1/24", "11/60"}, {"1", "2/5"}},
      {35, 3, {"-6", "1"}, {"1/4", "-1/24"}, {"-1/12", "5/24"}, {"2", "1"}},
      {126, 52, {"26/5"}, {"-13/60"}, {"23/60"}, {"26/5"}},
      {50, 8, {"-8", "2"}, {"1/3", "-1/12"}, {"-1/6", "1/4"}, {"4", "2"}},
      {225, 133, {"7"}, {"-7/24"}, {"11/24"}, {"7"}},
      {160, 78, {"6"}, {"-1/4"}, {"5/12"}, {"6"}},
      {90, 28, {"4"}, {"-1/6"}, {"1/3"}, {"4"}},
  };
  return rows;
}

// ---------------------------------------------------------------------------
// Candidate lookup helpers.

const Candidate* find_by_c(const std::vector<Candidate>& cands, const Rational& c) {
  for (const auto& cand : cands) {
    if (cand.c == c) return &cand;
  }
  return nullptr;
}

const Candidate* find_by_a(const std::vector<Candidate>& cands, const Rational& a) {
  for (const auto& cand : cands) {
    if (cand.a == a) return &cand;
  }
  return nullptr;
}

struct PairGroup {
  long s = 0;
  long m = 0;
  std::vector<const Candidate*> branches;  // ascending central charge
};

std::vector<PairGroup> group_by_pair(const std::vector<Candidate>& cands) {
  std::map<long, PairGroup> by_m;
  for (const auto& cand : cands) {
    auto& g = by_m[cand.m];
    g.s = cand.s;
    g.m = cand.m;
    g.branches.push_back(&cand);
  }
  std::vector<PairGroup> out;
  for (auto& [m, g] : by_m) {
    std::sort(g.branches.begin(), g.branches.end(),
              [](const Candidate* x, const Candidate* y) { return x->c < y->c; });
    out.push_back(std::move(g));
  }
  return out;
}

std::set<std::string> string_set(const std::vector<const char*>& v) {
  return {v.begin(), v.end()};
}

std::string join(const std::vector<std::string>& v, const char* sep = ", ") {
  std::string out;
  for (const auto& s : v) {
    if (!out.empty()) out += sep;
    out += s;
  }
  return out;
}

// Display order for the identified affine theories.
const std::vector<std::string>& affine_order() {
  static const std::vector<std::string> order = {"A1", "A2", "G2", "F4", "D4", "E6", "E7"};
  return order;
}

std::vector<std::string> identified_names(const Report& report) {
  std::set<std::string> seen;
  for (const auto& cand : report.candidates) {
    if (cand.verdict == Verdict::Identified) seen.insert(cand.identified_as);
  }
  std::vector<std::string> out;
  for (const auto& name : affine_order()) {
    if (seen.count(name)) out.push_back(name);
  }
  if (seen.count("YangLee")) out.push_back("YangLee");
  return out;
}

// ---------------------------------------------------------------------------
// Table reproduction (computed side) plus erratum collection.

void check_table1(const Report& report, std::vector<Erratum>* errata) {
  for (const auto& row : kTable1) {
    const Candidate* cand = find_by_c(report.candidates, Rational::parse(row.c));
    if (cand == nullptr) {
      errata->push_back({std::string("table 1, row ") + row.type + ", c", row.c, "absent"});
      continue;
    }
    const auto note = [&](const char* field, const char* printed, const Rational& computed) {
      if (computed != Rational::parse(printed)) {
        errata->push_back({std::string("table 1, row c=") + row.c + ", " + field, printed,
                           computed.str()});
      }
    };
    note("a", row.a, cand->a);
    note("b", row.b, cand->b);
  }
}

void check_table3(const Report& report, std::vector<Erratum>* errata) {
  const auto groups = group_by_pair(report.candidates);
  for (const auto& row : kTable3) {
    const std::set<std::string> printed_c = {row.c1, row.c2};
    const PairGroup* match = nullptr;
    for (const auto& g : groups) {
      std::set<std::string> cs;
      for (const auto* cand : g.branches) cs.insert(cand->c.str());
      if (cs == printed_c) {
        match = &g;
        break;
      }
    }
    if (match == nullptr) {
      errata->push_back({"table 3, row s=" + std::string(row.s), std::string(row.c1),
                         "no enumerated pair with these central charges"});
      continue;
    }
    const std::string location = "table 3, row (c = " + std::string(row.c1) + ", " + row.c2 + ")";
    if (std::to_string(match->s) != row.s) {
      errata->push_back({location + ", s", row.s, std::to_string(match->s)});
    }
    if (std::to_string(match->m) != row.m) {
      errata->push_back({location + ", m", row.m, std::to_string(match->m)});
    }
    std::set<std::string> printed_a = {row.a1, row.a2};
    std::set<std::string> computed_a;
    for (const auto* cand : match->branches) computed_a.insert(cand->a.str());
    if (printed_a != computed_a) {
      std::vector<std::string> pa(printed_a.begin(), printed_a.end());
      std::vector<std::string> ca(computed_a.begin(), computed_a.end());
      errata->push_back({location + ", a", join(pa), join(ca)});
    }
  }
}

void check_table4(const Report& report, std::vector<Erratum>* errata) {
  for (const auto& row : printed_table4()) {
    const Rational a = Rational::parse(row.a);
    const QSeries f = character_series(a, std::max<std::size_t>(report.terms, row.coeffs.size()));
    const std::string location = "table 4, row a=" + std::string(row.a);
    if (f.exponent() != Rational::parse(row.exponent)) {
      errata->push_back({location + ", leading exponent", row.exponent, f.exponent().str()});
    }
    for (std::size_t n = 0; n < row.coeffs.size() && n < f.terms(); ++n) {
      if (f[n] != Rational::parse(row.coeffs[n])) {
        errata->push_back({location + ", coefficient of q^" + std::to_string(n), row.coeffs[n],
                           f[n].str()});
      }
    }
  }
}

void check_table5(const Report& report, std::vector<Erratum>* errata) {
  std::vector<const Candidate*> survivors;
  for (const auto& cand : report.candidates) {
    if (cand.survived_series_filters()) survivors.push_back(&cand);
  }
  for (const auto& row : printed_table5()) {
    std::vector<const Candidate*> group;
    for (const auto* cand : survivors) {
      if (cand->s == row.s && cand->m == row.m) group.push_back(cand);
    }
    const std::string location = "table 5, row s=" + std::to_string(row.s);
    if (group.size() != row.c.size()) {
      errata->push_back({location + ", branch count", std::to_string(row.c.size()),
                         std::to_string(group.size())});
      continue;
    }
    const auto check = [&](const char* field, const std::vector<const char*>& printed,
                           const Rational Candidate::* member) {
      std::set<std::string> computed;
      for (const auto* cand : group) computed.insert((cand->*member).str());
      if (computed != string_set(printed)) {
        std::vector<std::string> cs(computed.begin(), computed.end());
        std::vector<std::string> ps(printed.begin(), printed.end());
        errata->push_back({location + ", " + field, join(ps), join(cs)});
      }
    };
    check("c", row.c, &Candidate::c);
    check("a", row.a, &Candidate::a);
    check("b", row.b, &Candidate::b);
    check("c~", row.ct, &Candidate::c_tilde);
  }
}

// ---------------------------------------------------------------------------
// JSON assembly.

ordered_json rational_list(const std::vector<const Candidate*>& group,
                           const Rational Candidate::* member) {
  ordered_json arr = ordered_json::array();
  for (const auto* cand : group) arr.push_back((cand->*member).str());
  return arr;
}

ordered_json table_json(const Report& report, int which) {
  ordered_json rows = ordered_json::array();
  switch (which) {
    case 1: {
      for (const auto& row : kTable1) {
        const Candidate* cand = find_by_c(report.candidates, Rational::parse(row.c));
        rows.push_back({{"type", row.type},
                        {"a", cand ? cand->a.str() : "?"},
                        {"b", cand ? cand->b.str() : "?"},
                        {"c", row.c}});
      }
      break;
    }
    case 2: {
      for (const auto& pair : admissible_exponents()) {
        rows.push_back({{"m1", pair.m1.str()}, {"m2", pair.m2.str()}});
      }
      break;
    }
    case 3: {
      const auto groups = group_by_pair(report.candidates);
      // Published row order, keyed by the (corrected) m value.
      for (const auto& row : kTable3) {
        const std::set<std::string> printed_c = {row.c1, row.c2};
        for (const auto& g : groups) {
          std::set<std::string> cs;
          for (const auto* cand : g.branches) cs.insert(cand->c.str());
          if (cs != printed_c) continue;
          rows.push_back({{"s", g.s},
                          {"m", g.m},
                          {"c", rational_list(g.branches, &Candidate::c)},
                          {"a", rational_list(g.branches, &Candidate::a)}});
          break;
        }
      }
      break;
    }
    case 4: {
      for (const auto& row : printed_table4()) {
        const Rational a = Rational::parse(row.a);
        const std::size_t depth = std::max<std::size_t>({report.terms, row.coeffs.size(), 10});
        const QSeries f = character_series(a, depth);
        ordered_json coeffs = ordered_json::array();
        const std::size_t shown = std::min<std::size_t>(9, f.terms());
        bool integral = true;
        for (std::size_t n = 0; n < shown; ++n) {
          coeffs.push_back(f[n].str());
        }
        for (std::size_t n = 0; n < f.terms(); ++n) integral = integral && f[n].is_integer();
        rows.push_back({{"a", row.a},
                        {"exponent", f.exponent().str()},
                        {"coefficients", coeffs},
                        {"integral", integral}});
      }
      break;
    }
    case 5: {
      for (const auto& row : printed_table5()) {
        std::vector<const Candidate*> group;
        for (const auto& cand : report.candidates) {
          if (cand.s == row.s && cand.m == row.m && cand.survived_series_filters()) {
            group.push_back(&cand);
          }
        }
        rows.push_back({{"s", row.s},
                        {"m", row.m},
                        {"c", rational_list(group, &Candidate::c)},
                        {"a", rational_list(group, &Candidate::a)},
                        {"b", rational_list(group, &Candidate::b)},
                        {"c~", rational_list(group, &Candidate::c_tilde)}});
      }
      break;
    }
    default:
      throw std::invalid_argument("table index must be 1..5");
  }
  return rows;
}

ordered_json errata_json(const Report& report, int which = 0) {
  ordered_json arr = ordered_json::array();
  const std::string prefix = which == 0 ? "" : "table " + std::to_string(which);
  for (const auto& e : report.errata) {
    if (!prefix.empty() && e.location.rfind(prefix, 0) != 0) continue;
    arr.push_back({{"location", e.location}, {"printed", e.printed}, {"computed", e.computed}});
  }
  return arr;
}

ordered_json candidate_json(const Candidate& cand) {
  ordered_json j{{"s", cand.s},
                 {"m", cand.m},
                 {"c", cand.c.str()},
                 {"a", cand.a.str()},
                 {"b", cand.b.str()},
                 {"h", cand.h.str()},
                 {"c~", cand.c_tilde.str()},
                 {"k1", cand.k1.str()},
                 {"verdict", std::string(verdict_name(cand.verdict))}};
  if (cand.verdict == Verdict::Identified) j["identified_as"] = cand.identified_as;
  if (cand.nonintegral_coeff) {
    j["nonintegral_coefficient"] = {{"index", cand.nonintegral_coeff->first},
                                    {"value", cand.nonintegral_coeff->second.str()}};
  }
  if (cand.negative_coeff) {
    j["negative_coefficient"] = {{"index", cand.negative_coeff->first},
                                 {"value", cand.negative_coeff->second.str()}};
  }
  if (cand.survived_series_filters() && cand.verdict != Verdict::Identified) {
    ordered_json lies = ordered_json::array();
    for (const auto& l : cand.lie_solutions) lies.push_back(l.str());
    j["lie_solutions"] = lies;
  }
  if (cand.ds_requirement) j["discrete_series_requirement"] = cand.ds_requirement->str();
  return j;
}

ordered_json verdict_summary_json(const Report& report) {
  std::vector<std::string> residual, eliminated;
  for (const auto& cand : report.candidates) {
    if (cand.verdict == Verdict::ResidualSMatrix) residual.push_back(cand.c.str());
    if (cand.verdict == Verdict::EliminatedLie ||
        cand.verdict == Verdict::EliminatedDiscreteSeries) {
      eliminated.push_back(cand.c.str());
    }
  }
  const auto identified = identified_names(report);
  std::vector<std::string> affine;
  for (const auto& name : identified) {
    if (name != "YangLee") affine.push_back(name);
  }
  std::vector<std::string> two_module;
  for (const auto& name : identified) {
    if (simple_module_count(name) == 2) two_module.push_back(name);
  }
  return {{"identified", identified},
          {"residual_smatrix", residual},
          {"eliminated", eliminated},
          {"main_theorem_1",
           {{"affine_level_1", affine},
            {"virasoro", std::vector<std::string>{"YangLee"}},
            {"unknown_central_charges", residual}}},
          {"main_theorem_2", two_module},
          {"assumptions",
           std::vector<std::string>{
               "the G2 and F4 verdicts import the level-1 identification "
               "(graded-character majorization) as a catalog fact"}}};
}

ordered_json report_json(const Report& report) {
  ordered_json tables;
  for (int t = 1; t <= 5; ++t) tables[std::to_string(t)] = table_json(report, t);
  ordered_json cands = ordered_json::array();
  for (const auto& cand : report.candidates) cands.push_back(candidate_json(cand));
  return {{"terms", report.terms},
          {"verdict_summary", verdict_summary_json(report)},
          {"tables", tables},
          {"errata", errata_json(report)},
          {"candidates", cands}};
}

// ---------------------------------------------------------------------------
// Markdown / CSV rendering.

void render_md_table(std::ostringstream& os, const std::vector<std::string>& header,
                     const std::vector<std::vector<std::string>>& rows) {
  os << "| " << join(header, " | ") << " |\n|";
  for (std::size_t i = 0; i < header.size(); ++i) os << " --- |";
  os << "\n";
  for (const auto& row : rows) os << "| " << join(row, " | ") << " |\n";
}

std::string cell_list(const ordered_json& j) {
  if (j.is_array()) {
    std::vector<std::string> parts;
    for (const auto& v : j) parts.push_back(v.is_string() ? v.get<std::string>() : v.dump());
    return join(parts);
  }
  return j.is_string() ? j.get<std::string>() : j.dump();
}

std::string table_markdown(const Report& report, int which) {
  const ordered_json rows = table_json(report, which);
  std::ostringstream os;
  os << "### Table " << which << "\n\n";
  if (!rows.empty()) {
    std::vector<std::string> header;
    for (const auto& [key, value] : rows.front().items()) header.push_back(key);
    std::vector<std::vector<std::string>> body;
    for (const auto& row : rows) {
      std::vector<std::string> line;
      for (const auto& key : header) line.push_back(cell_list(row.at(key)));
      body.push_back(std::move(line));
    }
    render_md_table(os, header, body);
  }
  const ordered_json errata = errata_json(report, which);
  if (!errata.empty()) {
    os << "\nErrata (printed vs computed):\n";
    for (const auto& e : errata) {
      os << "- " << e.at("location").get<std::string>() << ": printed "
         << e.at("printed").get<std::string>() << ", computed "
         << e.at("computed").get<std::string>() << "\n";
    }
  }
  return os.str();
}

std::string table_csv(const Report& report, int which) {
  const ordered_json rows = table_json(report, which);
  std::ostringstream os;
  if (rows.empty()) return "";
  std::vector<std::string> header;
  for (const auto& [key, value] : rows.front().items()) header.push_back(key);
  os << join(header, ",") << "\n";
  for (const auto& row : rows) {
    std::vector<std::string> line;
    for (const auto& key : header) {
      std::string cell = cell_list(row.at(key));
      if (cell.find(',') != std::string::npos) cell = "\"" + cell + "\"";
      line.push_back(cell);
    }
    os << join(line, ",") << "\n";
  }
  return os.str();
}

}  // namespace

Report build_report(std::size_t terms) {
  Report report;
  report.terms = terms;
  report.candidates = classify({.filter_terms = terms, .cross_check = true});
  check_table1(report, &report.errata);
  check_table3(report, &report.errata);
  check_table4(report, &report.errata);
  check_table5(report, &report.errata);
  return report;
}

std::string report_to_string(const Report& report, std::string_view format) {
  if (format == "json") return report_json(report).dump(2) + "\n";
  if (format == "csv") {
    std::ostringstream os;
    os << "s,m,c,a,b,h,c_tilde,k1,verdict,identified_as\n";
    for (const auto& cand : report.candidates) {
      os << cand.s << ',' << cand.m << ',' << cand.c.str() << ',' << cand.a.str() << ','
         << cand.b.str() << ',' << cand.h.str() << ',' << cand.c_tilde.str() << ','
         << cand.k1.str() << ',' << verdict_name(cand.verdict) << ',' << cand.identified_as
         << "\n";
    }
    return os.str();
  }
  if (format == "md") {
    std::ostringstream os;
    os << "# Order-2 monic MLDE classification\n\n";
    const auto identified = identified_names(report);
    os << "Identified: " << join(identified) << "\n\n";
    std::vector<std::string> residual;
    for (const auto& cand : report.candidates) {
      if (cand.verdict == Verdict::ResidualSMatrix) residual.push_back(cand.c.str());
    }
    os << "Residual central charges (settled by the S-matrix check): " << join(residual)
       << "\n\n";
    std::vector<std::string> two_module;
    for (const auto& name : identified) {
      if (simple_module_count(name) == 2) two_module.push_back(name);
    }
    os << "Two-module theories: " << join(two_module) << "\n\n";
    os << "Assumption: the G2 and F4 verdicts import the level-1 identification "
          "(graded-character majorization) as a catalog fact.\n\n";
    for (int t = 1; t <= 5; ++t) os << table_markdown(report, t) << "\n";
    return os.str();
  }
  throw std::invalid_argument("format must be json, csv or md");
}

std::string table_to_string(const Report& report, int which, std::string_view format) {
  if (format == "json") {
    const ordered_json j{{"table", which},
                         {"rows", table_json(report, which)},
                         {"errata", errata_json(report, which)}};
    return j.dump(2) + "\n";
  }
  if (format == "csv") return table_csv(report, which);
  if (format == "md") return table_markdown(report, which);
  throw std::invalid_argument("format must be json, csv or md");
}

}  // namespace mlde2
