#pragma once

#include "looplab/laurent_loop.hpp"

namespace looplab {

/// Finite section of the block Toeplitz operator A(g) (or the shifted A_1(g)).
///
/// Basis vectors are z^n e_i, n = 0..cutoff, ordered (n, i) -> n * dim + i. The shifted
/// polarization drops the constant mode of the last basis vector e_dim.
struct ToeplitzBlock {
  int dim = 0;
  int cutoff = 0;
  bool shifted = false;
  /// Square compression: block (j, k) = c_{j-k}, minus the dropped mode when shifted.
  Matrix matrix;
  /// Image of the same columns in the full Hardy space (rows extended by n_max of the
  /// loop), so that column_image^* column_image = P A^* A P exactly.
  Matrix column_image;
};

ToeplitzBlock toeplitz(const LaurentLoop& g, int cutoff, bool shifted);

struct LogDet {
  double value = 0.0;  ///< -infinity when singular
  bool singular = false;
};

/// log det(P A^* A P) as the sum of log squared singular values of the column image.
/// Exactly singular truncations (relative singular value below 1e-14) return -infinity.
LogDet log_det_AstarA(const ToeplitzBlock& t);

}  // namespace looplab
