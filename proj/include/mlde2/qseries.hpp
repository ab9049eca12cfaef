#pragma once

#include <cstddef>
#include <span>
#include <stdexcept>
#include <vector>

#include "mlde2/rational.hpp"

namespace mlde2 {

struct SeriesError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
// Raised when two series cannot be aligned (exponents differ by a non-integer).
struct AlignmentError : SeriesError {
  using SeriesError::SeriesError;
};
// Raised when inverting a series whose leading stored coefficient vanishes.
struct NonUnitError : SeriesError {
  using SeriesError::SeriesError;
};
// Raised by rational powers / normalization when the unit part is not monic.
struct NormalizationError : SeriesError {
  using SeriesError::SeriesError;
};

// Truncated power series  q^e * (c_0 + c_1 q + ... + c_{N-1} q^{N-1})  with a
// rational leading exponent e and exact rational coefficients.  The stored
// length N is the number of coefficients guaranteed valid; every operation
// shrinks it to what it can actually vouch for.  Values are immutable.
class QSeries {
 public:
  QSeries(Rational exponent, std::vector<Rational> coefficients);

  static QSeries constant(const Rational& value, std::size_t terms);
  static QSeries zero(std::size_t terms) { return constant(0, terms); }
  // q^e as a series with `terms` stored coefficients.
  static QSeries monomial(const Rational& exponent, std::size_t terms);

  const Rational& exponent() const { return exponent_; }
  std::size_t terms() const { return coeff_.size(); }
  std::span<const Rational> coefficients() const { return coeff_; }
  const Rational& operator[](std::size_t n) const { return coeff_.at(n); }

  bool is_zero() const;
  // Index of the first nonzero coefficient, or terms() if all vanish.
  std::size_t order_offset() const;

  QSeries truncated(std::size_t terms) const;
  // Re-anchors the series at e+count after checking the dropped coefficients vanish.
  QSeries stripped(std::size_t count) const;
  // Scales so that the leading stored coefficient becomes 1.
  QSeries normalized() const;

  QSeries inverse() const;
  // (q^e(1+X))^r = q^{re} * sum_k C(r,k) X^k; requires leading coefficient 1.
  QSeries pow(const Rational& r) const;
  // theta = q d/dq: multiplies the coefficient of q^{e+n} by (e+n).
  QSeries theta() const;
  // Substitution q -> q^m.
  QSeries rescaled(std::size_t m) const;

  friend QSeries operator+(const QSeries& x, const QSeries& y);
  friend QSeries operator-(const QSeries& x, const QSeries& y);
  friend QSeries operator*(const QSeries& x, const QSeries& y);
  friend QSeries operator*(const Rational& s, const QSeries& x);
  friend QSeries operator/(const QSeries& x, const QSeries& y) { return x * y.inverse(); }
  friend QSeries operator/(const QSeries& x, const Rational& s);
  friend QSeries operator-(const QSeries& x) { return Rational(-1) * x; }

  // Exact structural equality (same exponent, length, coefficients).
  friend bool operator==(const QSeries& x, const QSeries& y);

 private:
  Rational exponent_;
  std::vector<Rational> coeff_;
};

// Coefficientwise equality over the common guaranteed range after aligning
// exponents; throws AlignmentError when the exponents differ non-integrally.
bool agrees(const QSeries& x, const QSeries& y);

}  // namespace mlde2
