#include "looplab/toeplitz.hpp"

#include <cmath>
#include <limits>

#include <Eigen/SVD>

#include "looplab/errors.hpp"

namespace looplab {

namespace {

// Index of basis vector (n, i) or -1 if it is dropped by the shifted polarization.
int basis_index(int n, int i, int dim, bool shifted) {
  if (!shifted) return n * dim + i;
  if (n == 0) return i == dim - 1 ? -1 : i;
  return n * dim + i - 1;
}

int basis_size(int modes, int dim, bool shifted) { return modes * dim - (shifted ? 1 : 0); }

Matrix compress(const LaurentLoop& g, int col_modes, int row_modes, bool shifted) {
  const int dim = g.dim();
  Matrix out = Matrix::Zero(basis_size(row_modes, dim, shifted), basis_size(col_modes, dim, shifted));
  for (int j = 0; j < row_modes; ++j) {
    for (int k = 0; k < col_modes; ++k) {
      if (!g.in_band(j - k)) continue;
      const Matrix& c = g.coeff_ref(j - k);
      for (int a = 0; a < dim; ++a) {
        const int row = basis_index(j, a, dim, shifted);
        if (row < 0) continue;
        for (int b = 0; b < dim; ++b) {
          const int col = basis_index(k, b, dim, shifted);
          if (col >= 0) out(row, col) = c(a, b);
        }
      }
    }
  }
  return out;
}

}  // namespace

ToeplitzBlock toeplitz(const LaurentLoop& g, int cutoff, bool shifted) {
  if (cutoff < g.band_width())
    throw InvalidInput("toeplitz: cutoff " + std::to_string(cutoff) + " below band width " +
                       std::to_string(g.band_width()));
  ToeplitzBlock t;
  t.dim = g.dim();
  t.cutoff = cutoff;
  t.shifted = shifted;
  t.matrix = compress(g, cutoff + 1, cutoff + 1, shifted);
  t.column_image = compress(g, cutoff + 1, cutoff + 1 + g.n_max(), shifted);
  return t;
}

LogDet log_det_AstarA(const ToeplitzBlock& t) {
  if (t.column_image.cols() == 0) return {0.0, false};
  Eigen::BDCSVD<Matrix> svd(t.column_image);
  const auto& s = svd.singularValues();
  const double smax = s(0);
  const double smin = s(s.size() - 1);
  if (smax == 0.0 || smin <= 1e-14 * smax) return {-std::numeric_limits<double>::infinity(), true};
  double acc = 0.0;
  for (Eigen::Index k = 0; k < s.size(); ++k) acc += 2.0 * std::log(s(k));
  return {acc, false};
}

}  // namespace looplab
