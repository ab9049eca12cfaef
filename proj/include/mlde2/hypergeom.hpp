#pragma once

#include <cstddef>
#include <stdexcept>

#include "mlde2/qseries.hpp"

namespace mlde2 {

// The 2F1 series is undefined when the bottom parameter is a nonpositive integer.
struct ConvergenceError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Rising factorial x (x+1) ... (x+n-1); empty product 1.
Rational pochhammer(const Rational& x, unsigned n);

struct HypergeomParams {
  Rational a;
  Rational b;
  Rational c;
};

// sum_n (a)_n (b)_n / ((c)_n n!) z^n as a formal series in z.
QSeries gauss_2f1(const HypergeomParams& p, std::size_t terms);

// Normalized character q^a (1 + ...) assembled as K^a 2F1(a, a+1/3, 2a+5/6; K);
// the scalar 1728^a from K^a is dropped by the final normalization.
QSeries character_series(const Rational& a, std::size_t terms);

}  // namespace mlde2
