#include "looplab/birkhoff.hpp"

#include <cmath>

#include <Eigen/LU>

#include "looplab/errors.hpp"
#include "looplab/toeplitz.hpp"

namespace looplab {

namespace {

constexpr double kSingularRcond = 1e-13;

// First block column of A_M(g)^{-1}: blocks V_0..V_M.
std::vector<Matrix> first_inverse_column(const LaurentLoop& g, int cutoff) {
  const int dim = g.dim();
  const ToeplitzBlock t = toeplitz(g, cutoff, false);
  Eigen::PartialPivLU<Matrix> lu(t.matrix);
  const double rcond = lu.rcond();
  if (!(rcond > kSingularRcond))
    throw ConvergenceFailure("birkhoff: finite Toeplitz section is singular (loop not in the top stratum)");
  Matrix rhs = Matrix::Zero(t.matrix.rows(), dim);
  rhs.topRows(dim) = Matrix::Identity(dim, dim);
  const Matrix v = lu.solve(rhs);
  std::vector<Matrix> blocks;
  blocks.reserve(static_cast<std::size_t>(cutoff + 1));
  for (int j = 0; j <= cutoff; ++j) blocks.push_back(v.middleRows(j * dim, dim));
  return blocks;
}

Matrix checked_inverse(const Matrix& m, const char* what) {
  Eigen::FullPivLU<Matrix> lu(m);
  if (!lu.isInvertible() || lu.rcond() < kSingularRcond) throw ConvergenceFailure(what);
  return lu.inverse();
}

}  // namespace

Matrix birkhoff_middle(const LaurentLoop& g, int cutoff) {
  const auto v = first_inverse_column(g, cutoff);
  return checked_inverse(v[0], "birkhoff: leading block of the inverse section is singular");
}

BirkhoffLeading birkhoff_leading(const LaurentLoop& g, int cutoff) {
  const auto v = first_inverse_column(g, cutoff);
  BirkhoffLeading out;
  out.zero = checked_inverse(v[0], "birkhoff: leading block of the inverse section is singular");
  // g_+ = X^{-1} with X = V g_0, so the linear coefficient is -V_1 g_0.
  out.plus1 = cutoff >= 1 ? Matrix(-v[1] * out.zero) : Matrix::Zero(g.dim(), g.dim());
  return out;
}

BirkhoffFactors birkhoff_factor(const LaurentLoop& g, int cutoff, double tol) {
  const int dim = g.dim();
  const Matrix eye = Matrix::Identity(dim, dim);
  const auto v = first_inverse_column(g, cutoff);
  const Matrix g0 = checked_inverse(v[0], "birkhoff: leading block of the inverse section is singular");
  const Matrix g0_inv = v[0];

  // X = g_+^{-1} normalized to X(0) = I.
  std::vector<Matrix> x;
  x.reserve(v.size());
  for (const Matrix& block : v) x.push_back(block * g0);

  LaurentLoop plus(dim, 0, cutoff);
  plus.coeff_ref(0) = eye;
  for (int n = 1; n <= cutoff; ++n) {
    Matrix acc = Matrix::Zero(dim, dim);
    for (int k = 1; k <= n; ++k) acc.noalias() -= x[static_cast<std::size_t>(k)] * plus.coeff_ref(n - k);
    plus.coeff_ref(n) = acc;
  }

  LaurentLoop minus(dim, g.n_min(), 0);
  for (int n = g.n_min(); n <= 0; ++n) {
    Matrix acc = Matrix::Zero(dim, dim);
    for (int k = 0; k <= cutoff; ++k) {
      if (g.in_band(n - k)) acc.noalias() += g.coeff_ref(n - k) * x[static_cast<std::size_t>(k)];
    }
    minus.coeff_ref(n) = acc * g0_inv;
  }

  BirkhoffFactors out{std::move(minus), g0, std::move(plus), 0.0};
  const LaurentLoop product = multiply(multiply(out.minus, LaurentLoop::constant(g0)), out.plus);
  const int width = std::max(product.band_width(), g.band_width());
  out.residual = grid_distance(g, product, default_grid_size(width));
  if (!(out.residual <= tol))
    throw ConvergenceFailure("birkhoff: residual " + std::to_string(out.residual) + " exceeds tolerance at cutoff " +
                             std::to_string(cutoff));
  return out;
}

Matrix Ldu2::m() const {
  Matrix out = Matrix::Zero(2, 2);
  out(0, 0) = m0;
  out(1, 1) = std::conj(m0);
  return out;
}

Matrix Ldu2::a() const {
  Matrix out = Matrix::Zero(2, 2);
  out(0, 0) = a0;
  out(1, 1) = 1.0 / a0;
  return out;
}

Ldu2 ldu_2x2(const Matrix& g0) {
  if (g0.rows() != 2 || g0.cols() != 2) throw InvalidInput("ldu_2x2: expected a 2x2 matrix");
  const cplx d1 = g0(0, 0);
  if (std::abs(d1) <= 1e-14 * std::max(1.0, g0.norm())) throw NotInTopStratum("ldu_2x2: (g0)_11 vanishes");
  Ldu2 out;
  out.lower = Matrix::Identity(2, 2);
  out.lower(1, 0) = g0(1, 0) / d1;
  out.upper = Matrix::Identity(2, 2);
  out.upper(0, 1) = g0(0, 1) / d1;
  out.diagonal = Matrix::Zero(2, 2);
  out.diagonal(0, 0) = d1;
  out.diagonal(1, 1) = g0(1, 1) - g0(1, 0) * g0(0, 1) / d1;
  out.a0 = std::abs(d1);
  out.m0 = d1 / out.a0;
  return out;
}

Matrix TriangularFactors::m() const { return Ldu2{Matrix(), m0, a0, Matrix(), Matrix()}.m(); }

Matrix TriangularFactors::a() const { return Ldu2{Matrix(), m0, a0, Matrix(), Matrix()}.a(); }

TriangularFactors triangular_factor(const LaurentLoop& g, int cutoff, double tol) {
  if (g.dim() != 2) throw InvalidInput("triangular_factor: only 2x2 loops are supported");
  BirkhoffFactors b = birkhoff_factor(g, cutoff, tol);
  const Ldu2 d = ldu_2x2(b.zero);
  TriangularFactors out;
  out.l = multiply(b.minus, LaurentLoop::constant(d.lower));
  out.u = multiply(LaurentLoop::constant(d.upper), b.plus);
  out.m0 = d.m0;
  out.a0 = d.a0;
  out.residual = b.residual;
  return out;
}

double a0_from_dets(const LaurentLoop& g, int cutoff) {
  const LogDet plain = log_det_AstarA(toeplitz(g, cutoff, false));
  const LogDet shifted = log_det_AstarA(toeplitz(g, cutoff, true));
  if (plain.singular || shifted.singular) throw ConvergenceFailure("a0_from_dets: singular Toeplitz truncation");
  return std::exp(0.5 * (shifted.value - plain.value));
}

}  // namespace looplab
