#pragma once

#include <array>
#include <complex>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "mlde2/qseries.hpp"

namespace mlde2 {

using Complex = std::complex<double>;
using Matrix2 = std::array<std::array<Complex, 2>, 2>;

// The nome left the configured convergence disc, or the series is too short.
struct MarginError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
// The fit system is numerically rank deficient; resample the points.
struct ConditioningError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Numeric value of a q-series at tau in the upper half plane, with
// q^{e+n} = exp(2 pi i (e+n) tau) taken directly from tau (no branch cut).
// Requires at least 128 stored coefficients and |q| < 0.05.
Complex evaluate(const QSeries& f, Complex tau);

// Generic fit points: dual convergence margin Im tau, Im(-1/tau) > 1/2 and
// the S-fixed point tau = i avoided.
std::vector<Complex> default_points();

struct SMatrixResult {
  Matrix2 entries;           // F(-1/tau) = entries * F(tau)
  double fit_residual = 0;   // max relative deviation at the held-out point
  Complex witness_ratio;     // S12 / S21
  bool symmetrizable = false;
  // min over positive integers d of |ratio - d^2| (infinite when Re ratio < 0);
  // a positive rescaling of f2 by an integer dimension d symmetrizes the
  // matrix iff this vanishes.
  double symmetrizability_margin = 0;
};

// Least-squares fit of the 2x2 transformation matrix over all but the last
// point; the last point is held out for the residual.  Needs >= 3 points.
SMatrixResult extract_s_matrix(const QSeries& f1, const QSeries& f2,
                               std::span<const Complex> points, double tol = 1e-6);

// diag(e^{2 pi i a}, e^{2 pi i b}): the T-transformation on the solution pair.
std::array<Complex, 2> t_matrix(const Rational& a, const Rational& b);

struct ClosedFormErratum {
  int c = 0;
  std::string component;  // "f1" or "f2"
  std::string printed;    // formula as published
  std::string certified;  // formula the Frobenius oracle certifies
};

struct ClosedFormPair {
  QSeries f1;
  QSeries f2;
  std::vector<ClosedFormErratum> errata;
};

// Explicit eta-quotient solutions for c in {-6, -8, -10}, certified against
// the Frobenius expansions; published formulas that fail the check are
// replaced by their corrected candidates and reported as errata.
ClosedFormPair closed_form_pair(int c, std::size_t terms);

struct SMatrixErratum {
  int c = 0;
  std::string entry;  // e.g. "S21"
  Complex printed;
  Complex certified;
};

struct CaseResult {
  int c = 0;
  Rational a, b, k1;
  SMatrixResult s;
  ClosedFormPair forms;
  Matrix2 certified;                  // involution-consistent matrix
  Matrix2 printed;                    // matrix as published
  std::vector<SMatrixErratum> matrix_errata;
};

// The published transformation matrix for c in {-6, -8, -10}.
Matrix2 printed_s_matrix(int c);
// The involution-consistent matrix certified by the numeric extraction.
Matrix2 certified_s_matrix(int c);

// Full verification of one residual case: builds the Frobenius pair, extracts
// the S-matrix, certifies the closed forms and reports any sign errata in the
// published matrix.
CaseResult verify_case(int c, std::size_t terms = 192, double tol = 1e-6);

}  // namespace mlde2
