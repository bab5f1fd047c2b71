#include "looplab/root_coords.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "looplab/errors.hpp"

namespace looplab {

RootCoordsSU2 RootCoordsSU2::zero(int truncation, double level) {
  if (truncation < 0) throw InvalidInput("RootCoordsSU2: negative truncation");
  RootCoordsSU2 c;
  c.level = level;
  c.eta.assign(static_cast<std::size_t>(truncation), cplx{});
  c.chi.assign(static_cast<std::size_t>(truncation), cplx{});
  c.zeta.assign(static_cast<std::size_t>(truncation), cplx{});
  return c;
}

int RootCoordsSU2::truncation() const {
  return static_cast<int>(std::max({eta.size(), chi.size(), zeta.size()}));
}

cplx RootCoordsSU2::eta_at(int i) const {
  return i >= 0 && i < static_cast<int>(eta.size()) ? eta[static_cast<std::size_t>(i)] : cplx{};
}

cplx RootCoordsSU2::chi_at(int j) const {
  return j >= 1 && j <= static_cast<int>(chi.size()) ? chi[static_cast<std::size_t>(j - 1)] : cplx{};
}

cplx RootCoordsSU2::zeta_at(int k) const {
  return k >= 1 && k <= static_cast<int>(zeta.size()) ? zeta[static_cast<std::size_t>(k - 1)] : cplx{};
}

int RootCoordsSU2::support() const {
  auto nz = [](const std::vector<cplx>& v) {
    return static_cast<int>(std::count_if(v.begin(), v.end(), [](cplx c) { return c != cplx{}; }));
  };
  return nz(eta) + nz(chi) + nz(zeta);
}

void RootCoordsSU2::validate() const {
  if (!(level > -1.0)) throw InvalidLevel("RootCoordsSU2: level must exceed -1");
  if (chi0.real() != 0.0) throw InvalidInput("RootCoordsSU2: chi0 must be purely imaginary");
}

double unitary_scale(cplx c) { return 1.0 / std::sqrt(1.0 + std::norm(c)); }

LaurentLoop k1_factor(cplx eta, int n) {
  const double s = unitary_scale(eta);
  LaurentLoop f(2, -n, n);
  f.coeff_ref(0)(0, 0) += s;
  f.coeff_ref(0)(1, 1) += s;
  f.coeff_ref(n)(0, 1) += -std::conj(eta) * s;
  f.coeff_ref(-n)(1, 0) += eta * s;
  return f;
}

LaurentLoop k2_factor(cplx zeta, int n) {
  const double s = unitary_scale(zeta);
  LaurentLoop f(2, -n, n);
  f.coeff_ref(0)(0, 0) += s;
  f.coeff_ref(0)(1, 1) += s;
  f.coeff_ref(-n)(0, 1) += zeta * s;
  f.coeff_ref(n)(1, 0) += -std::conj(zeta) * s;
  return f;
}

LaurentLoop k1_synthesize(std::span<const cplx> eta, int band) {
  LaurentLoop g = LaurentLoop::identity(2);
  for (int n = static_cast<int>(eta.size()) - 1; n >= 0; --n) {
    if (eta[static_cast<std::size_t>(n)] == cplx{}) continue;
    g = multiply(g, k1_factor(eta[static_cast<std::size_t>(n)], n));
  }
  return g.with_band(-band, band);
}

LaurentLoop k2_synthesize(std::span<const cplx> zeta, int band) {
  LaurentLoop g = LaurentLoop::identity(2);
  for (int k = static_cast<int>(zeta.size()); k >= 1; --k) {
    if (zeta[static_cast<std::size_t>(k - 1)] == cplx{}) continue;
    g = multiply(g, k2_factor(zeta[static_cast<std::size_t>(k - 1)], k));
  }
  return g.with_band(-band, band);
}

namespace {

cplx chi_value(cplx chi0, std::span<const cplx> chi, double theta) {
  cplx acc = chi0;
  for (std::size_t j = 0; j < chi.size(); ++j) {
    const cplx zj = std::polar(1.0, static_cast<double>(j + 1) * theta);
    acc += chi[j] * zj - std::conj(chi[j]) * std::conj(zj);
  }
  return acc;
}

Matrix torus_value(cplx chi) {
  Matrix m = Matrix::Zero(2, 2);
  m(0, 0) = std::exp(chi);
  m(1, 1) = std::exp(-chi);
  return m;
}

}  // namespace

TorusLoop torus_loop(cplx chi0, std::span<const cplx> chi, int band, double threshold) {
  if (chi0.real() != 0.0) throw InvalidInput("torus_loop: chi0 must be purely imaginary");
  if (band < 0) throw InvalidInput("torus_loop: negative band");
  const int n_grid = default_grid_size(band);
  std::vector<Matrix> samples;
  samples.reserve(static_cast<std::size_t>(n_grid));
  for (int k = 0; k < n_grid; ++k)
    samples.push_back(torus_value(chi_value(chi0, chi, 2.0 * std::numbers::pi * k / n_grid)));
  TorusLoop out{fourier_project(samples, -band, band), 0.0};

  // Independent check grid: offset midpoints of a finer grid.
  const int check = 2 * n_grid + 1;
  // Evaluate at the shifted grid by rotating coefficients, then use the fast grid evaluation.
  LaurentLoop shifted = out.loop;
  for (int n = -band; n <= band; ++n) shifted.coeff_ref(n) *= std::polar(1.0, std::numbers::pi * n / check);
  const std::vector<Matrix> values = evaluate(shifted, check);
  for (int k = 0; k < check; ++k) {
    const double theta = 2.0 * std::numbers::pi * (k + 0.5) / check;
    const Matrix exact = torus_value(chi_value(chi0, chi, theta));
    out.aliasing_error = std::max(out.aliasing_error, (values[static_cast<std::size_t>(k)] - exact).norm());
  }
  if (out.aliasing_error > threshold)
    throw ConvergenceFailure("torus_loop: aliasing error " + std::to_string(out.aliasing_error) +
                             " above threshold; increase band");
  return out;
}

int torus_band_for(std::span<const cplx> chi, double threshold) {
  int degree = 0;
  for (std::size_t j = 0; j < chi.size(); ++j)
    if (chi[j] != cplx{}) degree = static_cast<int>(j + 1);
  if (degree == 0) return 0;
  const int step = std::max(4, degree);
  for (int band = 2 * degree; band <= 4096; band += step) {
    try {
      torus_loop(cplx{}, chi, band, threshold);
      return band;
    } catch (const ConvergenceFailure&) {
    }
  }
  throw ConvergenceFailure("torus_band_for: no band up to 4096 meets the threshold");
}

LaurentLoop synthesize(const RootCoordsSU2& coords, int torus_band) {
  coords.validate();
  const int eta_band = std::max(0, static_cast<int>(coords.eta.size()) - 1);
  const int zeta_band = static_cast<int>(coords.zeta.size());
  const LaurentLoop k1 = k1_synthesize(coords.eta, eta_band);
  const LaurentLoop k2 = k2_synthesize(coords.zeta, zeta_band);
  const TorusLoop torus = torus_loop(coords.chi0, coords.chi, torus_band);
  return multiply(multiply(star(k1), torus.loop), k2).trimmed();
}

LaurentLoop synthesize(const RootCoordsSU2& coords) { return synthesize(coords, torus_band_for(coords.chi)); }

double log_product_formula(const RootCoordsSU2& coords, ProductKind kind) {
  double eta_sum = 0.0;
  double eta_weighted = 0.0;
  for (std::size_t i = 0; i < coords.eta.size(); ++i) {
    const double l = std::log1p(std::norm(coords.eta[i]));
    eta_sum += l;
    eta_weighted += static_cast<double>(i) * l;
  }
  double zeta_sum = 0.0;
  double zeta_weighted = 0.0;
  for (std::size_t k = 0; k < coords.zeta.size(); ++k) {
    const double l = std::log1p(std::norm(coords.zeta[k]));
    zeta_sum += l;
    zeta_weighted += static_cast<double>(k + 1) * l;
  }
  double chi_term = 0.0;
  for (std::size_t j = 0; j < coords.chi.size(); ++j) chi_term += 2.0 * static_cast<double>(j + 1) * std::norm(coords.chi[j]);

  switch (kind) {
    case ProductKind::DetA:
      return -eta_weighted - chi_term - zeta_weighted;
    case ProductKind::DetA1:
      // exponents i + 1 and k - 1
      return -(eta_weighted + eta_sum) - chi_term - (zeta_weighted - zeta_sum);
    case ProductKind::A0Squared:
      return zeta_sum - eta_sum;
  }
  return 0.0;
}

K2Observables k2_observables(std::span<const cplx> zeta, int band) {
  if (band < 0) throw InvalidInput("k2_observables: negative band");
  const int degree = static_cast<int>(zeta.size());
  const LaurentLoop k2 = k2_synthesize(zeta, degree);
  const cplx d2_at_zero = k2.coeff(0)(1, 1);
  if (std::abs(d2_at_zero) < 1e-14) throw NotInTopStratum("k2_observables: d2(0) vanishes");

  K2Observables out;
  out.a2 = 1.0 / d2_at_zero.real();
  out.ratio_at_origin = k2.coeff(0)(1, 0) / d2_at_zero;

  // x = -P_{>=0}(c2 / conj(d2)) on the circle.
  const int fine = default_grid_size(band + degree + 8);
  std::vector<Matrix> samples;
  samples.reserve(static_cast<std::size_t>(fine));
  for (int k = 0; k < fine; ++k) {
    const Matrix v = k2.at(std::polar(1.0, 2.0 * std::numbers::pi * k / fine));
    Matrix s(1, 1);
    s(0, 0) = -v(1, 0) / std::conj(v(1, 1));
    samples.push_back(s);
  }
  const LaurentLoop x = fourier_project(samples, 0, band);
  out.x_series.resize(static_cast<std::size_t>(band + 1));
  for (int n = 0; n <= band; ++n) out.x_series[static_cast<std::size_t>(n)] = x.coeff_ref(n)(0, 0) / (out.a2 * out.a2);

  out.n_grid = default_grid_size(band);
  out.ratio.reserve(static_cast<std::size_t>(out.n_grid));
  for (int k = 0; k < out.n_grid; ++k) {
    const Matrix v = k2.at(std::polar(1.0, 2.0 * std::numbers::pi * k / out.n_grid));
    out.ratio.push_back(v(1, 0) / v(1, 1));
  }
  return out;
}

}  // namespace looplab
