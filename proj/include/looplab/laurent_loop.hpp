#pragma once

#include <complex>
#include <span>
#include <vector>

#include <Eigen/Dense>

namespace looplab {

using cplx = std::complex<double>;
using Matrix = Eigen::MatrixXcd;

/// Truncated matrix-valued Laurent series g(z) = sum_{n_min <= n <= n_max} c_n z^n.
///
/// Coefficients outside [n_min, n_max] are zero. The band always contains 0.
/// Values are immutable once built; all operations return new loops.
class LaurentLoop {
 public:
  /// Zero loop with the given band.
  LaurentLoop() : LaurentLoop(1, 0, 0) {}
  LaurentLoop(int dim, int n_min, int n_max);

  static LaurentLoop identity(int dim);
  static LaurentLoop constant(const Matrix& m);
  /// diag(z^p_1, ..., z^p_dim)
  static LaurentLoop diagonal_monomial(std::span<const int> powers);

  int dim() const { return dim_; }
  int n_min() const { return n_min_; }
  int n_max() const { return n_max_; }
  /// Largest |n| with a (possibly) nonzero coefficient slot.
  int band_width() const { return std::max(n_max_, -n_min_); }
  /// Number of Fourier modes, n_max - n_min + 1.
  int mode_count() const { return n_max_ - n_min_ + 1; }

  /// Coefficient c_n; zero matrix outside the band.
  Matrix coeff(int n) const;
  /// Mutable access, only inside the band.
  Matrix& coeff_ref(int n);
  const Matrix& coeff_ref(int n) const;
  bool in_band(int n) const { return n >= n_min_ && n <= n_max_; }

  /// Horner-style evaluation at an arbitrary point z != 0.
  Matrix at(cplx z) const;

  /// Copy restricted (or zero-extended) to [lo, hi].
  LaurentLoop with_band(int lo, int hi) const;
  /// Smallest band holding all coefficients with max-abs entry above `threshold`.
  LaurentLoop trimmed(double threshold = 0.0) const;

  bool operator==(const LaurentLoop& other) const;

 private:
  int dim_;
  int n_min_;
  int n_max_;
  std::vector<Matrix> coeffs_;
};

/// Pointwise product (gh)(z) = g(z)h(z); coefficient convolution.
LaurentLoop multiply(const LaurentLoop& g, const LaurentLoop& h);

/// g*(z) = g(z)^dagger on |z| = 1, i.e. c_n -> c_{-n}^dagger.
LaurentLoop star(const LaurentLoop& g);

/// Values at z_k = exp(2 pi i k / n_grid), k = 0..n_grid-1.
std::vector<Matrix> evaluate(const LaurentLoop& g, int n_grid);

/// Discrete Fourier projection of equispaced samples onto modes [n_min, n_max].
/// Requires samples.size() > n_max - n_min; throws InvalidInput otherwise.
LaurentLoop fourier_project(std::span<const Matrix> samples, int n_min, int n_max);

/// Default grid for evaluation/projection round trips: 4 * width + 1.
int default_grid_size(int band_width);

/// max_k || g(z_k) g(z_k)^dagger - I ||_F over the default grid of g.
double unitarity_defect(const LaurentLoop& g);
double unitarity_defect(const LaurentLoop& g, int n_grid);

/// max_k || g(z_k) - h(z_k) ||_F on an n_grid point grid.
double grid_distance(const LaurentLoop& g, const LaurentLoop& h, int n_grid);

/// Element sigma(z) = (a z + b) / (conj(b) z + conj(a)) of PSU(1,1), |a|^2 - |b|^2 = 1.
struct Mobius {
  cplx a{1.0, 0.0};
  cplx b{0.0, 0.0};

  static Mobius rotation(double phi);
  /// Pure boost with real parameter: a = cosh(s), b = sinh(s).
  static Mobius hyperbolic(double s);

  cplx apply(cplx z) const;
  cplx apply_inverse(cplx z) const;
  bool is_rotation() const { return b == cplx{0.0, 0.0}; }
};

/// Precomposition g o sigma^{-1} restricted to the circle, projected to [-band_out, band_out].
/// Rotations act exactly on coefficients (c_n -> e^{-i n phi} c_n) and keep the input band.
LaurentLoop mobius_reparam(const LaurentLoop& g, const Mobius& sigma, int band_out);

}  // namespace looplab
