#include "mlde2/hypergeom.hpp"

#include "mlde2/forms.hpp"

namespace mlde2 {

namespace {

void require_valid_bottom(const Rational& c) {
  if (c.is_integer() && c.sign() <= 0) {
    throw ConvergenceError("2F1 bottom parameter " + c.str() + " is a nonpositive integer");
  }
}

// Term coefficients t_0..t_{terms-1} of the 2F1 series via the ratio
// t_{n+1}/t_n = (a+n)(b+n)/((c+n)(n+1)).
std::vector<Rational> term_coefficients(const HypergeomParams& p, std::size_t terms) {
  std::vector<Rational> t(terms, Rational(0));
  t[0] = Rational(1);
  for (std::size_t n = 0; n + 1 < terms; ++n) {
    const Rational k(static_cast<long>(n));
    t[n + 1] = t[n] * (p.a + k) * (p.b + k) / ((p.c + k) * (k + Rational(1)));
  }
  return t;
}

}  // namespace

Rational pochhammer(const Rational& x, unsigned n) {
  Rational acc(1);
  for (unsigned k = 0; k < n; ++k) acc *= x + Rational(static_cast<long>(k));
  return acc;
}

QSeries gauss_2f1(const HypergeomParams& p, std::size_t terms) {
  require_valid_bottom(p.c);
  return QSeries(Rational(0), term_coefficients(p, terms));
}

QSeries character_series(const Rational& a, std::size_t terms) {
  const HypergeomParams p{a, a + Rational(1, 3), Rational(2) * a + Rational(5, 6)};
  require_valid_bottom(p.c);
  const QSeries k = hauptmodul_K(terms);
  // K has order 1, so only the first `terms` 2F1 terms can contribute, and
  // the Horner intermediate after n steps is invisible beyond terms - n.
  const auto t = term_coefficients(p, terms);
  QSeries composed = QSeries::constant(t[terms - 1], 1);
  for (std::size_t n = terms - 1; n-- > 0;) {
    composed = composed * k + QSeries::constant(t[n], terms - n);
  }
  const QSeries prefactor = (k / Rational(1728)).pow(a);
  return (prefactor * composed).normalized();
}

}  // namespace mlde2
