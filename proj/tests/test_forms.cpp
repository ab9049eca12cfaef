#include <doctest.h>

#include "mlde2/forms.hpp"

using namespace mlde2;

namespace {

// Brute-force divisor sum used as the oracle for sigma values.
long brute_sigma(long n, int power) {
  long total = 0;
  for (long d = 1; d <= n; ++d) {
    if (n % d != 0) continue;
    long p = 1;
    for (int i = 0; i < power; ++i) p *= d;
    total += p;
  }
  return total;
}

}  // namespace

TEST_CASE("divisor sums") {
  CHECK(sigma1(1) == 1);
  CHECK(sigma1(6) == 12);
  CHECK(sigma1(12) == 28);
  for (long n = 1; n <= 40; ++n) {
    CHECK(divisor_power_sum(n, 1) == brute_sigma(n, 1));
    CHECK(divisor_power_sum(n, 3) == brute_sigma(n, 3));
    CHECK(divisor_power_sum(n, 5) == brute_sigma(n, 5));
  }
  CHECK_THROWS_AS(divisor_power_sum(0, 1), std::invalid_argument);
}

TEST_CASE("Eisenstein normalizations") {
  const QSeries e2 = eisenstein(2, 5);
  const long expected[] = {1, -24, -72, -96, -168};
  for (std::size_t n = 0; n < 5; ++n) CHECK(e2[n] == Rational(expected[n]));
  CHECK(eisenstein(4, 3)[1] == Rational(240));
  CHECK(eisenstein(6, 3)[0] == Rational(1));
  CHECK(eisenstein(6, 3)[1] == Rational(-504));
  CHECK_THROWS_AS(eisenstein(8, 4), std::invalid_argument);
}

TEST_CASE("discriminant anchors at q and divides exactly by 1728") {
  const std::size_t n = 20;
  const QSeries delta = discriminant(n);
  CHECK(delta.exponent() == Rational(1));
  CHECK(delta[0] == Rational(1));
  CHECK(delta[1] == Rational(-24));
  CHECK(delta[2] == Rational(252));
  for (std::size_t k = 0; k < n; ++k) CHECK(delta[k].is_integer());

  // E4^3 - E6^2 == 0 mod 1728 coefficientwise is what the strip encodes; also
  // eta^24 must reproduce Delta.
  QSeries eta24 = eta(n);
  const QSeries eta1 = eta(n);
  for (int i = 0; i < 23; ++i) eta24 = eta24 * eta1;
  CHECK(agrees(eta24, delta));
}

TEST_CASE("j and K expansions") {
  const std::size_t n = 8;
  const QSeries j = j_function(n);
  CHECK(j.exponent() == Rational(-1));
  CHECK(j[0] == Rational(1));
  CHECK(j[1] == Rational(744));
  CHECK(j[2] == Rational(196884));
  CHECK(j[3] == Rational(21493760));
  for (std::size_t k = 0; k < n; ++k) CHECK(j[k].is_integer());

  const QSeries e4 = eisenstein(4, n);
  CHECK(agrees(discriminant(n) * j, e4 * e4 * e4));

  const QSeries k = hauptmodul_K(n);
  CHECK(k.exponent() == Rational(1));
  CHECK(k[0] == Rational(1728));
  const QSeries unit = k / Rational(1728);
  CHECK(unit[1] == Rational(-744));
  CHECK(unit[2] == Rational(356652));
  for (std::size_t i = 0; i < n; ++i) CHECK(unit[i].is_integer());

  // K * j = 1728 exactly to truncation.
  CHECK(agrees(k * j, QSeries::constant(1728, n)));
}

TEST_CASE("eta follows the pentagonal expansion") {
  const std::size_t n = 30;
  const QSeries e = eta(n);
  CHECK(e.exponent() == Rational(1, 24));
  // Independent oracle: multiply out prod (1-q^k) one factor at a time.
  std::vector<long> p(n, 0);
  p[0] = 1;
  for (std::size_t k = 1; k < n; ++k) {
    for (std::size_t i = n; i-- > k;) p[i] -= p[i - k];
  }
  for (std::size_t k = 0; k < n; ++k) CHECK(e[k] == Rational(p[k]));
  CHECK(e[1] == Rational(-1));
  CHECK(e[5] == Rational(1));
  CHECK(e[12] == Rational(-1));
}

TEST_CASE("level-3 forms") {
  const std::size_t n = 16;
  const QSeries d3 = delta3(n);
  CHECK(d3.exponent() == Rational(1, 3));
  CHECK(d3[0] == Rational(1));

  const QSeries i = i3(n);
  // chi_3 divisor sums, brute force.
  for (std::size_t m = 1; m < n; ++m) {
    long acc = 0;
    for (std::size_t d = 1; d <= m; ++d) {
      if (m % d != 0) continue;
      acc += d % 3 == 1 ? 1 : d % 3 == 2 ? -1 : 0;
    }
    CHECK(i[m] == Rational(6 * acc));
  }
  const long head[] = {1, 6, 0, 6, 6, 0, 0, 12, 0};
  for (std::size_t m = 0; m < 9; ++m) CHECK(i[m] == Rational(head[m]));

  const QSeries eta2 = eta(n) * eta(n);
  CHECK((d3 * eta2.inverse()).exponent() == Rational(1, 4));
}

TEST_CASE("catalog lookup") {
  CHECK(form_by_name("eta", 6).exponent() == Rational(1, 24));
  CHECK(form_by_name("I3", 6)[1] == Rational(6));
  CHECK_THROWS_AS(form_by_name("E8", 6), std::invalid_argument);
  CHECK(form_catalog().size() == 9);
  for (const auto& info : form_catalog()) {
    CHECK(form_by_name(info.name, 6).exponent() == info.leading_exponent);
  }
}
