#pragma once

#include <cstddef>
#include <stdexcept>

#include "mlde2/qseries.hpp"

namespace mlde2 {

// The recursion denominator vanished at offset n >= 1 (the two indicial roots
// differ by a nonzero integer); log solutions are out of contract.
struct ResonanceError : std::runtime_error {
  explicit ResonanceError(std::size_t n);
  std::size_t offset;
};

// The indicial discriminant 1/36 + 4 k1 is not a rational square.
struct IrrationalRootsError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Roots of x^2 - x/6 - k1 = 0; always lower + upper = 1/6, lower*upper = -k1.
struct IndicialRoots {
  Rational lower;
  Rational upper;
};

// D_k f = theta(f) - (k/12) E2 f, mapping weight k to weight k+2.
QSeries serre_derivative(const QSeries& f, int weight);

IndicialRoots indicial_roots(const Rational& k1);

// Normalized Frobenius solution q^{root}(1 + c_1 q + ...) of
// theta^2 f - (1/6) E2 theta f - k1 E4 f = 0 at the regular singular point q=0.
QSeries frobenius_solve(const Rational& k1, const Rational& root, std::size_t terms);

// Left-hand side of the equation above evaluated on f; the zero series iff f solves it.
QSeries mlde_residual(const QSeries& f, const Rational& k1);

}  // namespace mlde2
