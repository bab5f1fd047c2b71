#include "looplab/recovery.hpp"

#include <cmath>
#include <numbers>

#include <unsupported/Eigen/LevenbergMarquardt>
#include <unsupported/Eigen/NumericalDiff>

#include "looplab/birkhoff.hpp"
#include "looplab/errors.hpp"

namespace looplab {

namespace {

// Power series quotient a / b with b[0] != 0, truncated to the shorter input.
std::vector<cplx> series_divide(const std::vector<cplx>& a, const std::vector<cplx>& b) {
  const std::size_t len = std::min(a.size(), b.size());
  std::vector<cplx> q(len);
  for (std::size_t n = 0; n < len; ++n) {
    cplx acc = a[n];
    for (std::size_t m = 1; m <= n; ++m) acc -= b[m] * q[n - m];
    q[n] = acc / b[0];
  }
  return q;
}

// Second-row ratio (g_+)_{21} / (g_+)_{22} as a power series.
std::vector<cplx> plus_row_ratio(const LaurentLoop& plus) {
  std::vector<cplx> num;
  std::vector<cplx> den;
  for (int n = 0; n <= plus.n_max(); ++n) {
    num.push_back(plus.coeff_ref(n)(1, 0));
    den.push_back(plus.coeff_ref(n)(1, 1));
  }
  return series_divide(num, den);
}

Matrix weyl_swap() {
  Matrix w = Matrix::Zero(2, 2);
  w(0, 1) = 1.0;
  w(1, 0) = 1.0;
  return w;
}

int pick_cutoff(const LaurentLoop& g, int requested) {
  return requested > 0 ? std::max(requested, g.band_width()) : std::max(64, g.band_width());
}

double wrap_angle(double a) { return std::remainder(a, 2.0 * std::numbers::pi); }

void extract_chi(const LaurentLoop& g, RootCoordsSU2& coords) {
  const int t = coords.truncation();
  const LaurentLoop k1 = k1_synthesize(coords.eta, std::max(0, t - 1));
  const LaurentLoop k2 = k2_synthesize(coords.zeta, t);
  const LaurentLoop diag = multiply(multiply(k1, g), star(k2));
  const int n_grid = default_grid_size(diag.band_width() + t);
  const auto values = evaluate(diag, n_grid);

  std::vector<double> phase(static_cast<std::size_t>(n_grid));
  double prev = std::arg(values[0](0, 0));
  phase[0] = prev;
  for (int k = 1; k < n_grid; ++k) {
    const double raw = std::arg(values[static_cast<std::size_t>(k)](0, 0));
    prev += wrap_angle(raw - prev);
    phase[static_cast<std::size_t>(k)] = prev;
  }
  const double closing = wrap_angle(phase[0] - phase.back()) + phase.back() - phase[0];
  if (std::abs(closing) > 1e-6) throw ConvergenceFailure("recover_coords: torus part has nonzero winding");

  for (int j = 0; j <= t; ++j) {
    cplx c{};
    for (int k = 0; k < n_grid; ++k)
      c += phase[static_cast<std::size_t>(k)] * std::polar(1.0, -2.0 * std::numbers::pi * j * k / n_grid);
    c /= static_cast<double>(n_grid);
    if (j == 0) {
      coords.chi0 = {0.0, wrap_angle(c.real())};
    } else {
      coords.chi[static_cast<std::size_t>(j - 1)] = cplx{0.0, 1.0} * c;
    }
  }
}

// Real parameter packing: eta (2T), chi (2T), chi0 (1), zeta (2T).
Eigen::VectorXd pack(const RootCoordsSU2& c) {
  const int t = c.truncation();
  Eigen::VectorXd x(6 * t + 1);
  int p = 0;
  for (int i = 0; i < t; ++i, p += 2) x.segment(p, 2) << c.eta_at(i).real(), c.eta_at(i).imag();
  for (int j = 1; j <= t; ++j, p += 2) x.segment(p, 2) << c.chi_at(j).real(), c.chi_at(j).imag();
  x(p++) = c.chi0.imag();
  for (int k = 1; k <= t; ++k, p += 2) x.segment(p, 2) << c.zeta_at(k).real(), c.zeta_at(k).imag();
  return x;
}

RootCoordsSU2 unpack(const Eigen::VectorXd& x, int t, double level) {
  RootCoordsSU2 c = RootCoordsSU2::zero(t, level);
  int p = 0;
  for (int i = 0; i < t; ++i, p += 2) c.eta[static_cast<std::size_t>(i)] = {x(p), x(p + 1)};
  for (int j = 0; j < t; ++j, p += 2) c.chi[static_cast<std::size_t>(j)] = {x(p), x(p + 1)};
  c.chi0 = {0.0, x(p++)};
  for (int k = 0; k < t; ++k, p += 2) c.zeta[static_cast<std::size_t>(k)] = {x(p), x(p + 1)};
  return c;
}

struct GridFit {
  using Scalar = double;
  using InputType = Eigen::VectorXd;
  using ValueType = Eigen::VectorXd;
  using JacobianType = Eigen::MatrixXd;
  using QRSolver = Eigen::ColPivHouseholderQR<JacobianType>;
  enum { InputsAtCompileTime = Eigen::Dynamic, ValuesAtCompileTime = Eigen::Dynamic };

  std::vector<Matrix> target;
  int truncation = 0;
  int torus_band = 0;
  double level = 0.0;

  int inputs() const { return 6 * truncation + 1; }
  int values() const { return static_cast<int>(target.size()) * 8; }

  int operator()(const Eigen::VectorXd& x, Eigen::VectorXd& f) const {
    const RootCoordsSU2 c = unpack(x, truncation, level);
    LaurentLoop g = LaurentLoop::identity(2);
    try {
      g = synthesize(c, torus_band);
    } catch (const ConvergenceFailure&) {
      f.setConstant(1e3);
      return 0;
    }
    const auto v = evaluate(g, static_cast<int>(target.size()));
    int p = 0;
    for (std::size_t k = 0; k < v.size(); ++k)
      for (int r = 0; r < 2; ++r)
        for (int s = 0; s < 2; ++s) {
          const cplx d = v[k](r, s) - target[k](r, s);
          f(p++) = d.real();
          f(p++) = d.imag();
        }
    return 0;
  }
};

double resynthesis_residual(const LaurentLoop& g, const RootCoordsSU2& c, int torus_band) {
  const LaurentLoop h = synthesize(c, torus_band);
  return grid_distance(g, h, default_grid_size(std::max(g.band_width(), h.band_width())));
}

}  // namespace

std::vector<cplx> schur_peel(std::vector<cplx>& r, int first, int count) {
  std::vector<cplx> out;
  for (int k = first; k < first + count; ++k) {
    if (static_cast<int>(r.size()) <= k) throw ConvergenceFailure("schur_peel: series too short for requested depth");
    const cplx zeta_bar = -r[static_cast<std::size_t>(k)];
    const cplx zeta = std::conj(zeta_bar);
    out.push_back(zeta);
    // r <- (r + conj(zeta) z^k) / (1 - zeta r z^{-k})
    std::vector<cplx> num(r.begin(), r.end() - k);
    num[static_cast<std::size_t>(k)] += zeta_bar;
    std::vector<cplx> den(num.size());
    for (std::size_t n = 0; n < den.size(); ++n) den[n] = (n == 0 ? 1.0 : 0.0) - zeta * r[n + static_cast<std::size_t>(k)];
    r = series_divide(num, den);
  }
  return out;
}

LeadingCoords leading_coords(const LaurentLoop& g, int cutoff) {
  const BirkhoffLeading b = birkhoff_leading(g, cutoff);
  if (std::abs(b.zero(0, 0)) < 1e-14) throw NotInTopStratum("leading_coords: (g0)_11 vanishes");
  // (g_+)_{21} starts at z^1 and (g_+)_{22}(0) = 1, so the ratio's z^1 coefficient is plus1(1,0).
  return {-b.zero(1, 0) / b.zero(0, 0), -std::conj(b.plus1(1, 0))};
}

RecoveryReport recover_coords_report(const LaurentLoop& g, double level_hint, const RecoveryOptions& options) {
  if (g.dim() != 2) throw InvalidInput("recover_coords: expected a 2x2 loop");
  const int t = options.truncation;
  if (t < 1) throw InvalidInput("recover_coords: truncation must be positive");
  const int cutoff = pick_cutoff(g, options.cutoff);
  const double factor_tol = std::max(options.tol, 1e-8);

  RecoveryReport report;
  RootCoordsSU2& c = report.coords;
  c = RootCoordsSU2::zero(t, level_hint);

  const BirkhoffFactors bg = birkhoff_factor(g, cutoff, factor_tol);
  const Ldu2 d = ldu_2x2(bg.zero);
  c.eta[0] = -d.lower(1, 0);

  std::vector<cplx> r = plus_row_ratio(bg.plus);
  const auto zeta = schur_peel(r, 1, t);
  std::copy(zeta.begin(), zeta.end(), c.zeta.begin());

  if (t > 1) {
    const Matrix w = weyl_swap();
    const LaurentLoop peeled = multiply(LaurentLoop::constant(k1_factor(c.eta[0], 0).coeff(0)), g);
    const LaurentLoop flipped = multiply(multiply(LaurentLoop::constant(w), star(peeled)), LaurentLoop::constant(w));
    const BirkhoffFactors bh = birkhoff_factor(flipped, pick_cutoff(flipped, options.cutoff), factor_tol);
    std::vector<cplx> rh = plus_row_ratio(bh.plus);
    const auto eta = schur_peel(rh, 1, t - 1);
    std::copy(eta.begin(), eta.end(), c.eta.begin() + 1);
  }

  extract_chi(g, c);

  const int torus_band = torus_band_for(c.chi);
  report.residual = resynthesis_residual(g, c, torus_band);
  if (report.residual <= options.tol) return report;
  if (!options.allow_refinement)
    throw ConvergenceFailure("recover_coords: residual " + std::to_string(report.residual) + " after peeling");

  GridFit fit;
  fit.truncation = t;
  fit.torus_band = torus_band + 8;
  fit.level = level_hint;
  fit.target = evaluate(g, default_grid_size(std::max(g.band_width(), fit.torus_band + 2 * t)));
  Eigen::NumericalDiff<GridFit> numeric(fit);
  Eigen::LevenbergMarquardt<Eigen::NumericalDiff<GridFit>> lm(numeric);
  lm.setXtol(1e-14);
  lm.setFtol(1e-14);
  lm.setMaxfev(400);
  Eigen::VectorXd x = pack(c);
  lm.minimize(x);
  c = unpack(x, t, level_hint);
  c.chi0 = {0.0, wrap_angle(c.chi0.imag())};
  report.refined = true;
  report.residual = resynthesis_residual(g, c, fit.torus_band);
  if (!(report.residual <= options.tol))
    throw ConvergenceFailure("recover_coords: residual " + std::to_string(report.residual) +
                             " after least-squares refinement");
  return report;
}

RootCoordsSU2 recover_coords(const LaurentLoop& g, double level_hint, double tol, int truncation) {
  RecoveryOptions options;
  options.truncation = truncation;
  options.tol = tol;
  return recover_coords_report(g, level_hint, options).coords;
}

}  // namespace looplab
