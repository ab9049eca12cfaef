#include <doctest.h>

#include <sstream>

#include <json.hpp>

#include "mlde2/cli.hpp"
#include "mlde2/report.hpp"

using namespace mlde2;
using ordered_json = nlohmann::ordered_json;

namespace {

Report& cached_report() {
  static Report report = build_report(12);
  return report;
}

int run(const std::vector<std::string>& args, std::string* out_text = nullptr) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  if (out_text != nullptr) *out_text = out.str();
  return code;
}

}  // namespace

TEST_CASE("report errata pinpoint the published misprints") {
  const Report& report = cached_report();
  // Four headline misprints, a digit slip in the a=-1/4 row, and the five
  // displayed coefficients of the a=5/6 row (printed from a foreign series,
  // like its q^{-6/5} prefactor; the dimension law forces 52 at q^1).
  REQUIRE(report.errata.size() == 10);

  bool g2 = false, s90 = false, m133 = false, exp56 = false, digit = false, dim56 = false;
  for (const auto& e : report.errata) {
    if (e.printed == "-7/6" && e.computed == "-7/60") g2 = true;
    if (e.printed == "0" && e.computed == "90") s90 = true;
    if (e.printed == "33" && e.computed == "133") m133 = true;
    if (e.printed == "-6/5" && e.computed == "5/6") exp56 = true;
    if (e.printed == "264664" && e.computed == "264644") digit = true;
    if (e.printed == "1292" && e.computed == "52") dim56 = true;
  }
  CHECK(g2);
  CHECK(s90);
  CHECK(m133);
  CHECK(exp56);
  CHECK(digit);
  CHECK(dim56);
}

TEST_CASE("table shapes") {
  const Report& report = cached_report();
  const auto t2 = ordered_json::parse(table_to_string(report, 2, "json"));
  CHECK(t2.at("rows").size() == 9);
  const auto t3 = ordered_json::parse(table_to_string(report, 3, "json"));
  CHECK(t3.at("rows").size() == 22);
  const auto t4 = ordered_json::parse(table_to_string(report, 4, "json"));
  CHECK(t4.at("rows").size() == 20);
  const auto t5 = ordered_json::parse(table_to_string(report, 5, "json"));
  CHECK(t5.at("rows").size() == 10);
  int branches = 0;
  for (const auto& row : t5.at("rows")) branches += static_cast<int>(row.at("c").size());
  CHECK(branches == 14);
  const auto t1 = ordered_json::parse(table_to_string(report, 1, "json"));
  CHECK(t1.at("rows").size() == 11);
  CHECK(t1.at("rows")[2].at("a") == "-7/60");

  CHECK_THROWS_AS(table_to_string(report, 6, "json"), std::invalid_argument);
}

TEST_CASE("verdict summary") {
  const Report& report = cached_report();
  const auto j = ordered_json::parse(report_to_string(report, "json"));
  const auto& summary = j.at("verdict_summary");
  CHECK(summary.at("identified") ==
        ordered_json::array({"A1", "A2", "G2", "F4", "D4", "E6", "E7", "YangLee"}));
  CHECK(summary.at("residual_smatrix").size() == 3);
  CHECK(summary.at("eliminated").size() == 3);
  CHECK(summary.at("main_theorem_2") ==
        ordered_json::array({"A1", "G2", "F4", "E7", "YangLee"}));
  CHECK(summary.at("assumptions").size() == 1);
  CHECK(j.at("candidates").size() == 44);
}

TEST_CASE("json output round-trips byte-identically") {
  const Report& report = cached_report();
  const std::string text = report_to_string(report, "json");
  CHECK(ordered_json::parse(text).dump(2) + "\n" == text);
  const std::string table = table_to_string(report, 5, "json");
  CHECK(ordered_json::parse(table).dump(2) + "\n" == table);
}

TEST_CASE("csv and markdown render") {
  const Report& report = cached_report();
  const std::string csv = report_to_string(report, "csv");
  CHECK(csv.rfind("s,m,c,a,b,h,c_tilde,k1,verdict,identified_as\n", 0) == 0);
  CHECK(std::count(csv.begin(), csv.end(), '\n') == 45);
  const std::string md = table_to_string(report, 2, "md");
  CHECK(md.find("| m1 | m2 |") != std::string::npos);
  CHECK(md.find("59/60") != std::string::npos);
  CHECK_THROWS_AS(report_to_string(report, "xml"), std::invalid_argument);
}

TEST_CASE("cli subcommands") {
  std::string text;
  CHECK(run({"forms", "eta", "--terms", "6", "--format", "json"}, &text) == 0);
  auto j = ordered_json::parse(text);
  CHECK(j.at("exponent") == "1/24");
  CHECK(j.at("coefficients")[1] == "-1");

  CHECK(run({"character", "--a", "11/60", "--terms", "9", "--format", "json"}, &text) == 0);
  j = ordered_json::parse(text);
  CHECK(j.at("coefficients") ==
        ordered_json::array({"1", "0", "1", "1", "1", "1", "2", "2", "3"}));

  CHECK(run({"mlde", "--k1", "5/576", "--terms", "6", "--format", "json"}, &text) == 0);
  j = ordered_json::parse(text);
  CHECK(j.at("indicial_roots") == ordered_json::array({"-1/24", "5/24"}));
  CHECK(j.at("residuals_vanish") == true);

  CHECK(run({"tables", "--which", "2", "--terms", "10", "--format", "json"}, &text) == 0);
  CHECK(ordered_json::parse(text).at("rows").size() == 9);

  CHECK(run({"classify", "--terms", "12", "--format", "json"}, &text) == 0);
  CHECK(ordered_json::parse(text).at("candidates").size() == 44);
}

TEST_CASE("cli error paths") {
  std::string text;
  CHECK(run({"character", "--a", "nonsense"}, &text) != 0);
  CHECK(run({"classify", "--terms", "4"}, &text) != 0);
  CHECK(run({"smatrix", "--c", "-7"}, &text) != 0);
  CHECK(run({"tables", "--which", "9"}, &text) != 0);
  CHECK(run({"forms", "Zeta"}, &text) != 0);
  CHECK(run({}, &text) != 0);
}
