#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "mlde2/qseries.hpp"

namespace mlde2 {

// Catalog metadata; weight and level are informational.
struct FormInfo {
  std::string name;
  Rational weight;
  int level;
  Rational leading_exponent;
};

// Sum of d^power over the positive divisors d of n.
mpz_class divisor_power_sum(unsigned long n, unsigned power);
mpz_class sigma1(unsigned long n);

// Level-1 Eisenstein series of weight k in {2, 4, 6}, constant term 1.
QSeries eisenstein(int k, std::size_t terms);
// Delta = (E4^3 - E6^2)/1728, anchored at its true order q^1.
QSeries discriminant(std::size_t terms);
// j = E4^3 / Delta = q^{-1} + 744 + 196884 q + ...
QSeries j_function(std::size_t terms);
// K = 1728/j = 1728 Delta / E4^3 = 1728 q (1 - 744 q + ...).
QSeries hauptmodul_K(std::size_t terms);
// eta = q^{1/24} prod (1 - q^n), via the pentagonal number expansion.
QSeries eta(std::size_t terms);
// Delta_3 = eta(3 tau)^3 / eta(tau), leading exponent 1/3.
QSeries delta3(std::size_t terms);
// I_3 = 1 + 6 sum_n (sum_{d|n} chi_3(d)) q^n with chi_3 the mod-3 Legendre symbol.
QSeries i3(std::size_t terms);

const std::vector<FormInfo>& form_catalog();
// Looks up one of {E2,E4,E6,Delta,j,K,eta,Delta3,I3}; throws on unknown names.
QSeries form_by_name(std::string_view name, std::size_t terms);

}  // namespace mlde2
