#pragma once

#include "looplab/laurent_loop.hpp"

namespace looplab {

/// g = minus * zero * plus with minus(infinity) = I, plus(0) = I.
struct BirkhoffFactors {
  LaurentLoop minus;  ///< modes in [n_min(g), 0]
  Matrix zero;
  LaurentLoop plus;   ///< modes in [0, cutoff]
  double residual = 0.0;  ///< max grid Frobenius error of the product
};

/// Riemann-Hilbert factorization from the finite section A_M(g) X = E_0.
///
/// The first block column of the inverse section gives X = g_+^{-1} g_0^{-1}; g_+ is the
/// power-series inverse of X g_0 truncated at `cutoff`, and g_- = g X g_0 restricted to
/// nonpositive modes. Throws ConvergenceFailure if the section is singular (winding, not
/// in the top stratum) or the residual exceeds `tol`.
BirkhoffFactors birkhoff_factor(const LaurentLoop& g, int cutoff, double tol);

/// Middle factor g_0 only; skips the residual check. Throws ConvergenceFailure when the
/// finite section is numerically singular.
Matrix birkhoff_middle(const LaurentLoop& g, int cutoff);

/// g_0 and the z^1 coefficient of g_+, from the same single solve as birkhoff_middle.
struct BirkhoffLeading {
  Matrix zero;
  Matrix plus1;
};
BirkhoffLeading birkhoff_leading(const LaurentLoop& g, int cutoff);

/// g0 = lower * diag(m0 a0, (m0 a0)^{-1}) * upper for 2x2 g0 with det g0 = 1.
struct Ldu2 {
  Matrix lower;     ///< lower unipotent
  cplx m0{1.0, 0.0};  ///< unit modulus
  double a0 = 1.0;  ///< positive
  Matrix upper;     ///< upper unipotent
  /// Exact diagonal factor diag(g11, det/g11); equals m * a when det g0 = 1.
  Matrix diagonal;

  Matrix m() const;
  Matrix a() const;
};

/// Throws NotInTopStratum when (g0)_11 vanishes.
Ldu2 ldu_2x2(const Matrix& g0);

/// g = l * m * a * u with l(infinity) lower unipotent and u(0) upper unipotent.
struct TriangularFactors {
  LaurentLoop l;
  cplx m0{1.0, 0.0};
  double a0 = 1.0;
  LaurentLoop u;
  double residual = 0.0;

  Matrix m() const;
  Matrix a() const;
};

TriangularFactors triangular_factor(const LaurentLoop& g, int cutoff, double tol);

/// a_0 = sqrt(det(A_1^* A_1) / det(A^* A)) at the given cutoff.
double a0_from_dets(const LaurentLoop& g, int cutoff);

}  // namespace looplab
