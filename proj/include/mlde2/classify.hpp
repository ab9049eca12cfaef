#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "mlde2/qseries.hpp"

namespace mlde2 {

enum class Verdict {
  Identified,
  EliminatedExponent,
  EliminatedIntegrality,
  EliminatedPositivity,
  EliminatedLie,
  EliminatedDiscreteSeries,
  ResidualSMatrix,
};

std::string_view verdict_name(Verdict v);

// Allowed fractional parts of the indicial roots: the nine admissible
// T-exponent pairs, each summing to 7/6.
struct ExponentPair {
  Rational m1;
  Rational m2;
};
const std::array<ExponentPair, 9>& admissible_exponents();

struct SimpleAlgebra {
  char family;    // 'A'..'G'
  unsigned rank;  // Cartan rank
  friend auto operator<=>(const SimpleAlgebra&, const SimpleAlgebra&) = default;
};
unsigned simple_dimension(const SimpleAlgebra& s);
bool simply_laced(const SimpleAlgebra& s);
std::string simple_name(const SimpleAlgebra& s);

// A reductive Lie algebra: a canonical multiset of simple summands plus an
// abelian center of the given rank.
struct LieSolution {
  std::vector<SimpleAlgebra> summands;  // sorted canonically
  unsigned abelian_rank = 0;
  unsigned dimension() const;
  unsigned rank() const;
  std::string str() const;
  friend bool operator==(const LieSolution&, const LieSolution&) = default;
};

// All reductive algebras of the exact dimension with total rank <= max_rank.
// Enumerates over A(l>=1), B(l>=2), C(l>=3), D(l>=4), G2, F4, E6, E7, E8 so
// that the low-rank coincidences B1=C1=A1, B2=C2, D2=A1+A1, D3=A3 are not
// double counted.
std::vector<LieSolution> reductive_enumerate(unsigned dimension, unsigned max_rank);

// Witness (p, q), coprime and >= 2, with 1 - 6(p-q)^2/(pq) = c, if one exists.
// Exact: the reduced denominator of (1-c)/6 must factor as pq.
std::optional<std::pair<unsigned long, unsigned long>> discrete_series_witness(const Rational& c);
bool discrete_series_contains(const Rational& c);

struct Candidate {
  long s = 0;
  long m = 0;
  Rational c;        // central charge, a root of 5c^2 + (22+m)c - 10m = 0
  Rational a;        // -c/24
  Rational b;        // 1/6 - a
  Rational h;        // conformal weight b + c/24
  Rational c_tilde;  // positive member of {-24a, -24b}; max of them when neither is
  Rational k1;       // -ab
  Verdict verdict = Verdict::EliminatedExponent;
  std::string identified_as;  // set when verdict == Identified

  // Filter diagnostics.
  std::optional<std::pair<std::size_t, Rational>> nonintegral_coeff;
  std::optional<std::pair<std::size_t, Rational>> negative_coeff;
  std::vector<LieSolution> lie_solutions;
  // Discrete-series charge c - rank that failed, for EliminatedDiscreteSeries.
  std::optional<Rational> ds_requirement;

  bool survived_series_filters() const {
    return verdict != Verdict::EliminatedExponent && verdict != Verdict::EliminatedIntegrality &&
           verdict != Verdict::EliminatedPositivity;
  }
};

// All nonnegative (s, m) with s^2 + 120^2 = (m+122)^2, sorted by m, found by
// factoring 120^2 into equal-parity divisor pairs.
std::vector<std::pair<long, long>> pythagorean_pairs();

// The two central-charge branches c = (-(22+m) +- s)/10 for one solution pair.
std::pair<Candidate, Candidate> candidates_from_pair(long s, long m);

// True iff frac(a) is one of the eighteen admissible residues.
bool exponent_filter(const Rational& a);

// First non-integral coefficient of a normalized series, if any.
std::optional<std::pair<std::size_t, Rational>> nonintegral_coefficient(const QSeries& f);
// First negative coefficient, if any.
std::optional<std::pair<std::size_t, Rational>> negative_coefficient(const QSeries& f);

// The positive member of {-24a, -24b}; exactly one must be positive.
Rational effective_central_charge(const Rational& a, const Rational& b);

// Number of simple modules of each identified theory (catalog constants).
int simple_module_count(std::string_view identified);

struct ClassifyOptions {
  std::size_t filter_terms = 32;  // depth of the integrality/positivity filters
  bool cross_check = true;        // dual-route and dimension-law self checks
};

// Runs the whole cascade over every candidate and assigns final verdicts.
std::vector<Candidate> classify(const ClassifyOptions& options = {});

}  // namespace mlde2
