#include "mlde2/forms.hpp"

#include <stdexcept>

namespace mlde2 {

mpz_class divisor_power_sum(unsigned long n, unsigned power) {
  if (n == 0) throw std::invalid_argument("divisor sum needs n >= 1");
  mpz_class total = 0;
  for (unsigned long d = 1; d * d <= n; ++d) {
    if (n % d != 0) continue;
    mpz_class dp, qp;
    mpz_ui_pow_ui(dp.get_mpz_t(), d, power);
    total += dp;
    const unsigned long q = n / d;
    if (q != d) {
      mpz_ui_pow_ui(qp.get_mpz_t(), q, power);
      total += qp;
    }
  }
  return total;
}

mpz_class sigma1(unsigned long n) { return divisor_power_sum(n, 1); }

QSeries eisenstein(int k, std::size_t terms) {
  long scale;
  unsigned power;
  switch (k) {
    case 2: scale = -24; power = 1; break;
    case 4: scale = 240; power = 3; break;
    case 6: scale = -504; power = 5; break;
    default: throw std::invalid_argument("Eisenstein weight must be 2, 4 or 6");
  }
  std::vector<Rational> c(terms, Rational(0));
  c[0] = Rational(1);
  for (std::size_t n = 1; n < terms; ++n) {
    c[n] = Rational(mpq_class(scale * divisor_power_sum(n, power)));
  }
  return QSeries(Rational(0), std::move(c));
}

QSeries discriminant(std::size_t terms) {
  const QSeries e4 = eisenstein(4, terms + 1);
  const QSeries e6 = eisenstein(6, terms + 1);
  const QSeries raw = (e4 * e4 * e4 - e6 * e6) / Rational(1728);
  return raw.stripped(1);
}

QSeries j_function(std::size_t terms) {
  const QSeries e4 = eisenstein(4, terms);
  return e4 * e4 * e4 * discriminant(terms).inverse();
}

QSeries hauptmodul_K(std::size_t terms) {
  const QSeries e4 = eisenstein(4, terms);
  return Rational(1728) * (discriminant(terms) * (e4 * e4 * e4).inverse());
}

QSeries eta(std::size_t terms) {
  // prod (1-q^n) = sum_{k in Z} (-1)^k q^{k(3k-1)/2}.
  std::vector<Rational> c(terms, Rational(0));
  for (long k = 0;; ++k) {
    const long g1 = k * (3 * k - 1) / 2;
    const long g2 = k * (3 * k + 1) / 2;
    if (g1 >= static_cast<long>(terms) && g2 >= static_cast<long>(terms)) break;
    const Rational sign = (k % 2 == 0) ? Rational(1) : Rational(-1);
    if (g1 < static_cast<long>(terms)) c[g1] += sign;
    if (k > 0 && g2 < static_cast<long>(terms)) c[g2] += sign;
  }
  return QSeries(Rational(1, 24), std::move(c));
}

QSeries delta3(std::size_t terms) {
  const QSeries e = eta(terms);
  const QSeries e3 = e.rescaled(3);
  return (e3 * e3 * e3 * e.inverse()).truncated(terms);
}

QSeries i3(std::size_t terms) {
  std::vector<Rational> c(terms, Rational(0));
  c[0] = Rational(1);
  for (std::size_t d = 1; d < terms; ++d) {
    const int chi = d % 3 == 1 ? 1 : d % 3 == 2 ? -1 : 0;
    if (chi == 0) continue;
    for (std::size_t n = d; n < terms; n += d) c[n] += Rational(6L * chi);
  }
  return QSeries(Rational(0), std::move(c));
}

const std::vector<FormInfo>& form_catalog() {
  static const std::vector<FormInfo> catalog = {
      {"E2", Rational(2), 1, Rational(0)},
      {"E4", Rational(4), 1, Rational(0)},
      {"E6", Rational(6), 1, Rational(0)},
      {"Delta", Rational(12), 1, Rational(1)},
      {"j", Rational(0), 1, Rational(-1)},
      {"K", Rational(0), 1, Rational(1)},
      {"eta", Rational(1, 2), 1, Rational(1, 24)},
      {"Delta3", Rational(1), 3, Rational(1, 3)},
      {"I3", Rational(1), 3, Rational(0)},
  };
  return catalog;
}

QSeries form_by_name(std::string_view name, std::size_t terms) {
  if (name == "E2") return eisenstein(2, terms);
  if (name == "E4") return eisenstein(4, terms);
  if (name == "E6") return eisenstein(6, terms);
  if (name == "Delta") return discriminant(terms);
  if (name == "j") return j_function(terms);
  if (name == "K") return hauptmodul_K(terms);
  if (name == "eta") return eta(terms);
  if (name == "Delta3") return delta3(terms);
  if (name == "I3") return i3(terms);
  throw std::invalid_argument("unknown form '" + std::string(name) + "'");
}

}  // namespace mlde2
