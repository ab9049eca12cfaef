#include "mlde2/mlde.hpp"

#include <string>

#include "mlde2/forms.hpp"

namespace mlde2 {

ResonanceError::ResonanceError(std::size_t n)
    : std::runtime_error("resonant recursion: the indicial roots differ by the integer " +
                         std::to_string(n)),
      offset(n) {}

QSeries serre_derivative(const QSeries& f, int weight) {
  if (weight == 0) return f.theta();
  return f.theta() - Rational(weight, 12) * (eisenstein(2, f.terms()) * f);
}

IndicialRoots indicial_roots(const Rational& k1) {
  const Rational disc = Rational(1, 36) + Rational(4) * k1;
  const auto root = disc.sqrt_exact();
  if (!root) {
    throw IrrationalRootsError("indicial discriminant " + disc.str() +
                               " is not a rational square");
  }
  const Rational half = Rational(1, 2);
  return {(Rational(1, 6) - *root) * half, (Rational(1, 6) + *root) * half};
}

QSeries frobenius_solve(const Rational& k1, const Rational& root, std::size_t terms) {
  const QSeries e2 = eisenstein(2, terms);
  const QSeries e4 = eisenstein(4, terms);
  const auto indicial = [&](const Rational& x) { return x * x - x / Rational(6) - k1; };
  std::vector<Rational> u(terms, Rational(0));
  u[0] = Rational(1);
  for (std::size_t n = 1; n < terms; ++n) {
    const Rational den = indicial(root + Rational(static_cast<long>(n)));
    if (den.is_zero()) throw ResonanceError(n);
    // Matching the coefficient of q^{root+n}:
    //   u_n ((root+n)^2 - (root+n)/6 - k1)
    //     = sum_{m=1..n} (E2[m] (root+n-m)/6 + k1 E4[m]) u_{n-m}.
    Rational rhs(0);
    for (std::size_t m = 1; m <= n; ++m) {
      const Rational ladder = root + Rational(static_cast<long>(n - m));
      rhs += (e2[m] * ladder / Rational(6) + k1 * e4[m]) * u[n - m];
    }
    u[n] = rhs / den;
  }
  return QSeries(root, std::move(u));
}

QSeries mlde_residual(const QSeries& f, const Rational& k1) {
  const QSeries tf = f.theta();
  return tf.theta() - Rational(1, 6) * (eisenstein(2, f.terms()) * tf) -
         k1 * (eisenstein(4, f.terms()) * f);
}

}  // namespace mlde2
