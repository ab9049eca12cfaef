#include "mlde2/qseries.hpp"

#include <algorithm>
#include <utility>

namespace mlde2 {

namespace {

// Signed integer distance y - x between two exponents known to be compatible.
long exponent_gap(const QSeries& x, const QSeries& y) {
  const Rational d = y.exponent() - x.exponent();
  if (!d.is_integer()) {
    throw AlignmentError("exponents differ by the non-integer " + d.str());
  }
  const mpz_class z = d.numerator();
  if (!z.fits_slong_p()) throw SeriesError("exponent gap out of range");
  return z.get_si();
}

}  // namespace

QSeries::QSeries(Rational exponent, std::vector<Rational> coefficients)
    : exponent_(std::move(exponent)), coeff_(std::move(coefficients)) {
  if (coeff_.empty()) throw SeriesError("series needs at least one coefficient");
}

QSeries QSeries::constant(const Rational& value, std::size_t terms) {
  std::vector<Rational> c(terms, Rational(0));
  if (terms == 0) throw SeriesError("series needs at least one coefficient");
  c[0] = value;
  return QSeries(Rational(0), std::move(c));
}

QSeries QSeries::monomial(const Rational& exponent, std::size_t terms) {
  QSeries s = constant(1, terms);
  return QSeries(exponent, std::vector<Rational>(s.coeff_));
}

bool QSeries::is_zero() const { return order_offset() == terms(); }

std::size_t QSeries::order_offset() const {
  for (std::size_t n = 0; n < coeff_.size(); ++n) {
    if (!coeff_[n].is_zero()) return n;
  }
  return coeff_.size();
}

QSeries QSeries::truncated(std::size_t terms) const {
  if (terms == 0 || terms > coeff_.size()) terms = coeff_.size();
  return QSeries(exponent_, std::vector<Rational>(coeff_.begin(), coeff_.begin() + terms));
}

QSeries QSeries::stripped(std::size_t count) const {
  if (count >= coeff_.size()) throw SeriesError("stripping every stored coefficient");
  for (std::size_t n = 0; n < count; ++n) {
    if (!coeff_[n].is_zero()) throw SeriesError("stripping a nonzero coefficient");
  }
  return QSeries(exponent_ + Rational(static_cast<long>(count)),
                 std::vector<Rational>(coeff_.begin() + count, coeff_.end()));
}

QSeries QSeries::normalized() const {
  if (coeff_[0].is_zero()) throw NormalizationError("zero leading coefficient");
  if (coeff_[0] == Rational(1)) return *this;
  return *this / coeff_[0];
}

QSeries operator+(const QSeries& x, const QSeries& y) {
  const long gap = exponent_gap(x, y);
  const QSeries& lo = gap >= 0 ? x : y;
  const QSeries& hi = gap >= 0 ? y : x;
  const std::size_t off = static_cast<std::size_t>(gap >= 0 ? gap : -gap);
  // Valid through min(e_lo + N_lo, e_hi + N_hi) exclusive.
  const std::size_t n = std::min(lo.terms(), off + hi.terms());
  std::vector<Rational> c(lo.coeff_.begin(), lo.coeff_.begin() + n);
  for (std::size_t k = off; k < n; ++k) c[k] += hi.coeff_[k - off];
  return QSeries(lo.exponent_, std::move(c));
}

QSeries operator-(const QSeries& x, const QSeries& y) { return x + (-y); }

QSeries operator*(const QSeries& x, const QSeries& y) {
  const std::size_t n = std::min(x.terms(), y.terms());
  std::vector<Rational> c(n, Rational(0));
  for (std::size_t i = 0; i < std::min(x.terms(), n); ++i) {
    if (x.coeff_[i].is_zero()) continue;
    const std::size_t jmax = std::min(y.terms(), n - i);
    for (std::size_t j = 0; j < jmax; ++j) c[i + j] += x.coeff_[i] * y.coeff_[j];
  }
  return QSeries(x.exponent_ + y.exponent_, std::move(c));
}

QSeries operator*(const Rational& s, const QSeries& x) {
  std::vector<Rational> c(x.coeff_);
  for (auto& v : c) v *= s;
  return QSeries(x.exponent_, std::move(c));
}

QSeries operator/(const QSeries& x, const Rational& s) {
  if (s.is_zero()) throw SeriesError("division by the zero scalar");
  std::vector<Rational> c(x.coeff_);
  for (auto& v : c) v /= s;
  return QSeries(x.exponent_, std::move(c));
}

QSeries QSeries::inverse() const {
  if (coeff_[0].is_zero()) throw NonUnitError("inverting a series with zero leading coefficient");
  const std::size_t n = coeff_.size();
  std::vector<Rational> b(n, Rational(0));
  b[0] = Rational(1) / coeff_[0];
  for (std::size_t k = 1; k < n; ++k) {
    Rational acc(0);
    for (std::size_t j = 1; j <= k; ++j) acc += coeff_[j] * b[k - j];
    b[k] = -acc / coeff_[0];
  }
  return QSeries(-exponent_, std::move(b));
}

QSeries QSeries::pow(const Rational& r) const {
  if (coeff_[0] != Rational(1)) {
    throw NormalizationError("rational power requires leading coefficient 1");
  }
  const std::size_t n = coeff_.size();
  std::vector<Rational> binom(n);
  binom[0] = Rational(1);
  for (std::size_t k = 1; k < n; ++k) {
    binom[k] = binom[k - 1] * (r - Rational(static_cast<long>(k - 1))) /
               Rational(static_cast<long>(k));
  }
  // X = series - 1 has order >= 1, so sum_k C(r,k) X^k truncates at k = n-1.
  // Horner with X anchored at q^1; intermediate lengths grow with the number
  // of remaining X factors, which is all the output window can see of them.
  if (n == 1) return QSeries(r * exponent_, {Rational(1)});
  const QSeries x_shifted(Rational(1),
                          std::vector<Rational>(coeff_.begin() + 1, coeff_.end()));
  QSeries acc = constant(binom[n - 1], 1);
  for (std::size_t k = n - 1; k-- > 0;) acc = acc * x_shifted + constant(binom[k], n - k);
  return QSeries(r * exponent_, std::vector<Rational>(acc.coeff_));
}

QSeries QSeries::theta() const {
  std::vector<Rational> c(coeff_);
  for (std::size_t k = 0; k < c.size(); ++k) c[k] *= exponent_ + Rational(static_cast<long>(k));
  return QSeries(exponent_, std::move(c));
}

QSeries QSeries::rescaled(std::size_t m) const {
  if (m == 0) throw SeriesError("rescale factor must be positive");
  // q^{e+n} -> q^{m(e+n)}; the first unknown input term lands at offset mN,
  // so every interleaved position below that is a guaranteed zero.
  std::vector<Rational> c(m * coeff_.size(), Rational(0));
  for (std::size_t k = 0; k < coeff_.size(); ++k) c[m * k] = coeff_[k];
  return QSeries(Rational(static_cast<long>(m)) * exponent_, std::move(c));
}

bool operator==(const QSeries& x, const QSeries& y) {
  return x.exponent_ == y.exponent_ && x.coeff_ == y.coeff_;
}

bool agrees(const QSeries& x, const QSeries& y) {
  const long gap = exponent_gap(x, y);
  const QSeries& lo = gap >= 0 ? x : y;
  const QSeries& hi = gap >= 0 ? y : x;
  const std::size_t off = static_cast<std::size_t>(gap >= 0 ? gap : -gap);
  const std::size_t n = std::min(lo.terms(), off + hi.terms());
  for (std::size_t k = 0; k < std::min(off, n); ++k) {
    if (!lo[k].is_zero()) return false;
  }
  for (std::size_t k = off; k < n; ++k) {
    if (lo[k] != hi[k - off]) return false;
  }
  return true;
}

}  // namespace mlde2
