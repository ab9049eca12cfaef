#include "mlde2/rational.hpp"

#include <ostream>
#include <stdexcept>

namespace mlde2 {

Rational::Rational(long num, long den) {
  if (den == 0) throw std::invalid_argument("rational with zero denominator");
  value_ = mpq_class(num, den);
  value_.canonicalize();
}

Rational::Rational(mpq_class value) : value_(std::move(value)) {
  if (value_.get_den() == 0) throw std::invalid_argument("rational with zero denominator");
  value_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
  std::string s(text);
  if (s.empty()) throw std::invalid_argument("empty rational literal");
  try {
    mpq_class v(s, 10);
    if (v.get_den() == 0) throw std::invalid_argument("zero denominator");
    v.canonicalize();
    return Rational(std::move(v));
  } catch (const std::invalid_argument&) {
    throw std::invalid_argument("malformed rational literal: '" + s + "'");
  }
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw std::invalid_argument("rational division by zero");
  value_ /= o.value_;
  return *this;
}

mpz_class Rational::floor() const {
  mpz_class q;
  mpz_fdiv_q(q.get_mpz_t(), value_.get_num_mpz_t(), value_.get_den_mpz_t());
  return q;
}

Rational Rational::frac() const {
  mpq_class f = value_ - mpq_class(floor());
  return Rational(std::move(f));
}

Rational Rational::abs() const { return Rational(mpq_class(::abs(value_))); }

Rational Rational::pow_int(long e) const {
  if (e == 0) return Rational(1);
  const bool invert = e < 0;
  const auto ue = static_cast<unsigned long>(invert ? -e : e);
  if (invert && is_zero()) throw std::invalid_argument("zero to a negative power");
  mpz_class num, den;
  mpz_pow_ui(num.get_mpz_t(), value_.get_num_mpz_t(), ue);
  mpz_pow_ui(den.get_mpz_t(), value_.get_den_mpz_t(), ue);
  mpq_class r = invert ? mpq_class(den, num) : mpq_class(num, den);
  r.canonicalize();
  return Rational(std::move(r));
}

std::optional<Rational> Rational::sqrt_exact() const {
  if (sign() < 0) return std::nullopt;
  if (!mpz_perfect_square_p(value_.get_num_mpz_t()) ||
      !mpz_perfect_square_p(value_.get_den_mpz_t())) {
    return std::nullopt;
  }
  mpz_class num, den;
  mpz_sqrt(num.get_mpz_t(), value_.get_num_mpz_t());
  mpz_sqrt(den.get_mpz_t(), value_.get_den_mpz_t());
  return Rational(mpq_class(num, den));
}

std::string Rational::str() const {
  if (is_integer()) return value_.get_num().get_str();
  return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

}  // namespace mlde2
