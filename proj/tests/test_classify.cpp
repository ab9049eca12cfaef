#include <doctest.h>

#include <algorithm>
#include <set>

#include "mlde2/classify.hpp"

using namespace mlde2;

namespace {

std::set<std::string> solution_names(const std::vector<LieSolution>& v) {
  std::set<std::string> out;
  for (const auto& s : v) out.insert(s.str());
  return out;
}

const Candidate& by_c(const std::vector<Candidate>& cands, const Rational& c) {
  for (const auto& cand : cands) {
    if (cand.c == c) return cand;
  }
  throw std::runtime_error("candidate not found");
}

}  // namespace

TEST_CASE("pythagorean census") {
  const auto pairs = pythagorean_pairs();
  CHECK(pairs.size() == 22);
  CHECK(std::is_sorted(pairs.begin(), pairs.end(),
                       [](auto x, auto y) { return x.second < y.second; }));
  const std::set<std::pair<long, long>> set(pairs.begin(), pairs.end());
  CHECK(set.count({22, 0}) == 1);
  CHECK(set.count({3599, 3479}) == 1);
  CHECK(set.count({90, 28}) == 1);
  CHECK(set.count({225, 133}) == 1);
  CHECK(set.count({0, 28}) == 0);
  for (const auto& [s, m] : pairs) CHECK(s * s + 14400 == (m + 122) * (m + 122));
}

TEST_CASE("candidate construction") {
  const auto [lo, hi] = candidates_from_pair(22, 0);
  CHECK(lo.c == Rational(-22, 5));
  CHECK(hi.c == Rational(0));
  CHECK(lo.a == Rational(11, 60));
  CHECK(lo.b == Rational(-1, 60));
  CHECK(lo.c_tilde == Rational(2, 5));
  CHECK(lo.h == Rational(-1, 5));
  CHECK(lo.k1 == Rational(11, 3600));

  const auto [m6, c1] = candidates_from_pair(35, 3);
  CHECK(m6.c == Rational(-6));
  CHECK(c1.c == Rational(1));

  const auto [m10, g2] = candidates_from_pair(64, 14);
  CHECK(m10.c == Rational(-10));
  CHECK(g2.c == Rational(14, 5));
  CHECK(g2.a == Rational(-7, 60));
}

TEST_CASE("exponent filter") {
  CHECK(exponent_filter(Rational(-1, 24)));
  CHECK(exponent_filter(Rational(35, 12)));
  CHECK(exponent_filter(Rational(5, 6)));
  CHECK(!exponent_filter(Rational(-49, 120)));
  CHECK(!exponent_filter(Rational(0)));
  CHECK(!exponent_filter(Rational(7, 12)));

  // The nine admissible pairs each sum to 7/6.
  for (const auto& p : admissible_exponents()) {
    CHECK(p.m1 + p.m2 == Rational(7, 6));
    CHECK(Rational(0) <= p.m1);
    CHECK(p.m1 < Rational(1));
  }
}

TEST_CASE("effective central charge") {
  CHECK(effective_central_charge(Rational(1, 4), Rational(-1, 12)) == Rational(2));
  CHECK(effective_central_charge(Rational(11, 60), Rational(-1, 60)) == Rational(2, 5));
  CHECK(effective_central_charge(Rational(-1, 6), Rational(1, 3)) == Rational(4));
  CHECK_THROWS_AS(effective_central_charge(Rational(0), Rational(1, 6)), std::domain_error);
  CHECK_THROWS_AS(effective_central_charge(Rational(-1), Rational(-2)), std::domain_error);
}

TEST_CASE("reductive enumeration reproduces the case analysis") {
  CHECK(solution_names(reductive_enumerate(3, 1)) == std::set<std::string>{"A1"});
  CHECK(solution_names(reductive_enumerate(8, 2)) == std::set<std::string>{"A2"});
  CHECK(solution_names(reductive_enumerate(28, 4)) == std::set<std::string>{"D4", "G2+G2"});
  CHECK(solution_names(reductive_enumerate(78, 6)) == std::set<std::string>{"B6", "C6", "E6"});
  CHECK(solution_names(reductive_enumerate(133, 7)) == std::set<std::string>{"E7"});
  CHECK(solution_names(reductive_enumerate(14, 2)) == std::set<std::string>{"G2"});
  CHECK(solution_names(reductive_enumerate(52, 5)) == std::set<std::string>{"F4"});
  CHECK(reductive_enumerate(190, 7).empty());
  CHECK(reductive_enumerate(1, 0).empty());
  CHECK(solution_names(reductive_enumerate(1, 1)) == std::set<std::string>{"u1"});
  CHECK(solution_names(reductive_enumerate(0, 0)) == std::set<std::string>{"0"});
}

TEST_CASE("every enumeration result recomputes to the requested data") {
  for (unsigned dim : {3u, 8u, 14u, 28u, 52u}) {
    for (unsigned rank : {1u, 2u, 4u, 6u}) {
      for (const auto& sol : reductive_enumerate(dim, rank)) {
        CHECK(sol.dimension() == dim);
        CHECK(sol.rank() <= rank);
        CHECK(std::is_sorted(sol.summands.begin(), sol.summands.end(),
                             [](const SimpleAlgebra& x, const SimpleAlgebra& y) {
                               return simple_dimension(x) > simple_dimension(y);
                             }));
      }
    }
  }
}

TEST_CASE("discrete series membership") {
  const auto yl = discrete_series_witness(Rational(-22, 5));
  REQUIRE(yl.has_value());
  CHECK(yl->first == 2);
  CHECK(yl->second == 5);
  CHECK(!discrete_series_contains(Rational(-6)));
  const auto ising = discrete_series_witness(Rational(1, 2));
  REQUIRE(ising.has_value());
  CHECK(ising->first == 3);
  CHECK(ising->second == 4);
  CHECK(!discrete_series_contains(Rational(1)));
  CHECK(!discrete_series_contains(Rational(2)));
}

TEST_CASE("full classification verdicts") {
  const auto cands = classify({.filter_terms = 16, .cross_check = true});
  CHECK(cands.size() == 44);

  int exponent = 0, integrality = 0, positivity = 0, lie = 0, ds = 0, residual = 0;
  std::set<std::string> identified;
  for (const auto& cand : cands) {
    switch (cand.verdict) {
      case Verdict::EliminatedExponent: ++exponent; break;
      case Verdict::EliminatedIntegrality: ++integrality; break;
      case Verdict::EliminatedPositivity: ++positivity; break;
      case Verdict::EliminatedLie: ++lie; break;
      case Verdict::EliminatedDiscreteSeries: ++ds; break;
      case Verdict::ResidualSMatrix: ++residual; break;
      case Verdict::Identified: identified.insert(cand.identified_as); break;
    }
  }
  CHECK(exponent == 24);
  CHECK(integrality == 5);
  CHECK(positivity == 1);
  CHECK(lie == 2);
  CHECK(ds == 1);
  CHECK(residual == 3);
  CHECK(identified ==
        std::set<std::string>{"A1", "A2", "G2", "D4", "F4", "E6", "E7", "YangLee"});

  CHECK(by_c(cands, Rational(7)).identified_as == "E7");
  CHECK(by_c(cands, Rational(14, 5)).identified_as == "G2");
  CHECK(by_c(cands, Rational(14, 5)).a == Rational(-7, 60));
  CHECK(by_c(cands, Rational(-5)).verdict == Verdict::EliminatedDiscreteSeries);
  CHECK(by_c(cands, Rational(-5)).ds_requirement.value() == Rational(-6));
  CHECK(by_c(cands, Rational(2, 5)).verdict == Verdict::EliminatedLie);
  CHECK(by_c(cands, Rational(38, 5)).verdict == Verdict::EliminatedLie);
  CHECK(by_c(cands, Rational(-6)).verdict == Verdict::ResidualSMatrix);
  CHECK(by_c(cands, Rational(35, 12) * Rational(-24)).verdict == Verdict::EliminatedIntegrality);

  const auto& bad = by_c(cands, Rational(-70));
  REQUIRE(bad.nonintegral_coeff.has_value());
  CHECK(bad.nonintegral_coeff->first == 2);
  CHECK(bad.nonintegral_coeff->second == Rational(847903, 23));

  const auto& neg = by_c(cands, Rational(-20));
  CHECK(neg.verdict == Verdict::EliminatedPositivity);
  REQUIRE(neg.negative_coeff.has_value());
  CHECK(neg.negative_coeff->second == Rational(-272));

  // Consistency: the filter answers the same question for a and b.
  for (const auto& cand : cands) {
    CHECK(exponent_filter(cand.a) == exponent_filter(cand.b));
    CHECK(cand.a + cand.b == Rational(1, 6));
    const Rational relation = Rational(5) * cand.c * cand.c +
                              (Rational(22) + Rational(cand.m)) * cand.c -
                              Rational(10) * Rational(cand.m);
    CHECK(relation.is_zero());
  }
}

TEST_CASE("classification is deterministic") {
  const auto first = classify({.filter_terms = 12, .cross_check = false});
  const auto second = classify({.filter_terms = 12, .cross_check = false});
  REQUIRE(first.size() == second.size());
  for (std::size_t i = 0; i < first.size(); ++i) {
    CHECK(first[i].c == second[i].c);
    CHECK(first[i].verdict == second[i].verdict);
    CHECK(first[i].identified_as == second[i].identified_as);
  }
}

TEST_CASE("module count catalog") {
  CHECK(simple_module_count("A1") == 2);
  CHECK(simple_module_count("G2") == 2);
  CHECK(simple_module_count("F4") == 2);
  CHECK(simple_module_count("E7") == 2);
  CHECK(simple_module_count("YangLee") == 2);
  CHECK(simple_module_count("A2") == 3);
  CHECK(simple_module_count("E6") == 3);
  CHECK(simple_module_count("D4") == 4);
  CHECK_THROWS_AS(simple_module_count("E8"), std::invalid_argument);
}
