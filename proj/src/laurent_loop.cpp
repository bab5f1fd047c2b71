#include "looplab/laurent_loop.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include <unsupported/Eigen/FFT>

#include "looplab/errors.hpp"

namespace looplab {

LaurentLoop::LaurentLoop(int dim, int n_min, int n_max)
    : dim_(dim), n_min_(n_min), n_max_(n_max) {
  if (dim < 1) throw InvalidInput("LaurentLoop: dim must be positive");
  if (n_min > 0 || n_max < 0) throw InvalidInput("LaurentLoop: band must contain 0");
  coeffs_.assign(static_cast<std::size_t>(n_max - n_min + 1), Matrix::Zero(dim, dim));
}

LaurentLoop LaurentLoop::identity(int dim) {
  LaurentLoop g(dim, 0, 0);
  g.coeffs_[0] = Matrix::Identity(dim, dim);
  return g;
}

LaurentLoop LaurentLoop::constant(const Matrix& m) {
  if (m.rows() != m.cols()) throw InvalidInput("LaurentLoop::constant: matrix not square");
  LaurentLoop g(static_cast<int>(m.rows()), 0, 0);
  g.coeffs_[0] = m;
  return g;
}

LaurentLoop LaurentLoop::diagonal_monomial(std::span<const int> powers) {
  const int dim = static_cast<int>(powers.size());
  const auto [lo, hi] = std::minmax_element(powers.begin(), powers.end());
  LaurentLoop g(dim, std::min(*lo, 0), std::max(*hi, 0));
  for (int i = 0; i < dim; ++i) g.coeff_ref(powers[i])(i, i) = 1.0;
  return g;
}

Matrix LaurentLoop::coeff(int n) const {
  if (!in_band(n)) return Matrix::Zero(dim_, dim_);
  return coeffs_[static_cast<std::size_t>(n - n_min_)];
}

Matrix& LaurentLoop::coeff_ref(int n) {
  if (!in_band(n)) throw InvalidInput("LaurentLoop: mode outside band");
  return coeffs_[static_cast<std::size_t>(n - n_min_)];
}

const Matrix& LaurentLoop::coeff_ref(int n) const {
  if (!in_band(n)) throw InvalidInput("LaurentLoop: mode outside band");
  return coeffs_[static_cast<std::size_t>(n - n_min_)];
}

Matrix LaurentLoop::at(cplx z) const {
  // Horner on the nonnegative and negative parts separately.
  Matrix pos = Matrix::Zero(dim_, dim_);
  for (int n = n_max_; n >= 0; --n) pos = pos * z + coeff_ref(n);
  Matrix neg = Matrix::Zero(dim_, dim_);
  const cplx zi = 1.0 / z;
  for (int n = n_min_; n <= -1; ++n) neg = (neg + coeff_ref(n)) * zi;
  return pos + neg;
}

LaurentLoop LaurentLoop::with_band(int lo, int hi) const {
  LaurentLoop out(dim_, lo, hi);
  for (int n = std::max(lo, n_min_); n <= std::min(hi, n_max_); ++n) out.coeff_ref(n) = coeff_ref(n);
  return out;
}

LaurentLoop LaurentLoop::trimmed(double threshold) const {
  int lo = 0;
  int hi = 0;
  for (int n = n_min_; n <= n_max_; ++n) {
    if (coeff_ref(n).cwiseAbs().maxCoeff() > threshold) {
      lo = std::min(lo, n);
      hi = std::max(hi, n);
    }
  }
  return with_band(lo, hi);
}

bool LaurentLoop::operator==(const LaurentLoop& other) const {
  if (dim_ != other.dim_) return false;
  const int lo = std::min(n_min_, other.n_min_);
  const int hi = std::max(n_max_, other.n_max_);
  for (int n = lo; n <= hi; ++n) {
    if (coeff(n) != other.coeff(n)) return false;
  }
  return true;
}

LaurentLoop multiply(const LaurentLoop& g, const LaurentLoop& h) {
  if (g.dim() != h.dim()) throw InvalidInput("multiply: dimension mismatch");
  LaurentLoop out(g.dim(), g.n_min() + h.n_min(), g.n_max() + h.n_max());
  for (int n = g.n_min(); n <= g.n_max(); ++n) {
    const Matrix& a = g.coeff_ref(n);
    if (a.isZero(0.0)) continue;
    for (int m = h.n_min(); m <= h.n_max(); ++m) out.coeff_ref(n + m).noalias() += a * h.coeff_ref(m);
  }
  return out;
}

LaurentLoop star(const LaurentLoop& g) {
  LaurentLoop out(g.dim(), -g.n_max(), -g.n_min());
  for (int n = g.n_min(); n <= g.n_max(); ++n) out.coeff_ref(-n) = g.coeff_ref(n).adjoint();
  return out;
}

namespace {

cplx grid_point(long k, int n_grid) {
  const double angle = 2.0 * std::numbers::pi * static_cast<double>(k) / n_grid;
  return {std::cos(angle), std::sin(angle)};
}

}  // namespace

std::vector<Matrix> evaluate(const LaurentLoop& g, int n_grid) {
  if (n_grid < 1) throw InvalidInput("evaluate: grid size must be positive");
  const int dim = g.dim();
  std::vector<Matrix> out(static_cast<std::size_t>(n_grid), Matrix::Zero(dim, dim));
  Eigen::FFT<double> fft;
  fft.SetFlag(Eigen::FFT<double>::Unscaled);
  std::vector<cplx> spec(static_cast<std::size_t>(n_grid)), vals;
  for (int r = 0; r < dim; ++r)
    for (int c = 0; c < dim; ++c) {
      std::fill(spec.begin(), spec.end(), cplx{});
      // z^n equals z^(n mod N) on the grid, so folding is exact.
      for (int n = g.n_min(); n <= g.n_max(); ++n) spec[static_cast<std::size_t>(((n % n_grid) + n_grid) % n_grid)] += g.coeff_ref(n)(r, c);
      fft.inv(vals, spec);
      for (int k = 0; k < n_grid; ++k) out[static_cast<std::size_t>(k)](r, c) = vals[static_cast<std::size_t>(k)];
    }
  return out;
}

LaurentLoop fourier_project(std::span<const Matrix> samples, int n_min, int n_max) {
  const int n_grid = static_cast<int>(samples.size());
  if (n_grid == 0) throw InvalidInput("fourier_project: no samples");
  if (n_grid <= n_max - n_min) throw InvalidInput("fourier_project: grid too small for band (aliasing)");
  const int dim = static_cast<int>(samples[0].rows());
  LaurentLoop out(dim, n_min, n_max);
  Eigen::FFT<double> fft;
  std::vector<cplx> vals(static_cast<std::size_t>(n_grid)), spec;
  for (int r = 0; r < dim; ++r)
    for (int c = 0; c < dim; ++c) {
      for (int k = 0; k < n_grid; ++k) vals[static_cast<std::size_t>(k)] = samples[static_cast<std::size_t>(k)](r, c);
      fft.fwd(spec, vals);
      for (int n = n_min; n <= n_max; ++n)
        out.coeff_ref(n)(r, c) = spec[static_cast<std::size_t>(((n % n_grid) + n_grid) % n_grid)] / static_cast<double>(n_grid);
    }
  return out;
}

int default_grid_size(int band_width) { return 4 * std::max(band_width, 1) + 1; }

double unitarity_defect(const LaurentLoop& g, int n_grid) {
  double worst = 0.0;
  const Matrix eye = Matrix::Identity(g.dim(), g.dim());
  for (const Matrix& v : evaluate(g, n_grid)) worst = std::max(worst, (v * v.adjoint() - eye).norm());
  return worst;
}

double unitarity_defect(const LaurentLoop& g) { return unitarity_defect(g, default_grid_size(g.band_width())); }

double grid_distance(const LaurentLoop& g, const LaurentLoop& h, int n_grid) {
  const auto a = evaluate(g, n_grid);
  const auto b = evaluate(h, n_grid);
  double worst = 0.0;
  for (std::size_t k = 0; k < a.size(); ++k) worst = std::max(worst, (a[k] - b[k]).norm());
  return worst;
}

Mobius Mobius::rotation(double phi) { return {std::polar(1.0, phi / 2.0), {0.0, 0.0}}; }

Mobius Mobius::hyperbolic(double s) { return {{std::cosh(s), 0.0}, {std::sinh(s), 0.0}}; }

cplx Mobius::apply(cplx z) const { return (a * z + b) / (std::conj(b) * z + std::conj(a)); }

cplx Mobius::apply_inverse(cplx z) const { return (std::conj(a) * z - b) / (-std::conj(b) * z + a); }

LaurentLoop mobius_reparam(const LaurentLoop& g, const Mobius& sigma, int band_out) {
  const double norm = std::norm(sigma.a) - std::norm(sigma.b);
  if (std::abs(norm - 1.0) > 1e-12) throw InvalidInput("mobius_reparam: parameters do not preserve the circle");
  if (sigma.is_rotation()) {
    // sigma^{-1}(z) = conj(a)/a * z, so c_n picks up (conj(a)/a)^n.
    const cplx u = std::conj(sigma.a) / sigma.a;
    LaurentLoop out = g;
    for (int n = g.n_min(); n <= g.n_max(); ++n) out.coeff_ref(n) *= std::pow(u, n);
    return out;
  }
  if (band_out < 0) throw InvalidInput("mobius_reparam: negative band");
  const int n_grid = default_grid_size(std::max(band_out, g.band_width()));
  std::vector<Matrix> samples;
  samples.reserve(static_cast<std::size_t>(n_grid));
  for (int k = 0; k < n_grid; ++k) samples.push_back(g.at(sigma.apply_inverse(grid_point(k, n_grid))));
  return fourier_project(samples, -band_out, band_out);
}

}  // namespace looplab
