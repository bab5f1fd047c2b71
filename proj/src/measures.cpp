#include "looplab/measures.hpp"

#include <cmath>
#include <numbers>

#include <Eigen/Cholesky>
#include <Eigen/Dense>
#include <boost/math/quadrature/exp_sinh.hpp>

#include "looplab/errors.hpp"

namespace looplab {

namespace {

constexpr double kPi = std::numbers::pi;

void check_level(const Rational& level) {
  if (level <= Rational(-1)) throw InvalidLevel("level must exceed -1, got " + to_string(level));
}

double log_power_law(double p, cplx w) { return std::log((p - 1.0) / kPi) - p * std::log1p(std::norm(w)); }

double at(const std::vector<Rational>& v, int i, const char* what) {
  if (i < 0 || i >= static_cast<int>(v.size())) throw InvalidInput(std::string(what) + " index outside truncation");
  return to_double(v[static_cast<std::size_t>(i)]);
}

Eigen::MatrixXd gram_matrix(const MeasureSpec& spec) {
  const int d = spec.cartan_dim;
  Eigen::MatrixXd g(d, d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) g(i, j) = spec.coroot_gram[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
  return g;
}

}  // namespace

double MeasureSpec::eta_exponent(int i) const { return at(eta_exponents, i, "eta"); }
double MeasureSpec::chi_rate(int j) const { return at(chi_rates, j - 1, "chi"); }
double MeasureSpec::zeta_exponent(int k) const { return at(zeta_exponents, k - 1, "zeta"); }

MeasureSpec su2_measure(const Rational& level, int truncation) {
  check_level(level);
  if (truncation < 0) throw InvalidInput("truncation must be non-negative");
  MeasureSpec s;
  s.level = level;
  s.truncation = truncation;
  const Rational shift = level + Rational(2);
  for (int i = 0; i < truncation; ++i) s.eta_exponents.push_back(Rational(2) + shift * Rational(i));
  for (int j = 1; j <= truncation; ++j) {
    s.chi_rates.push_back(Rational(2 * j) * shift);
    s.zeta_exponents.push_back(shift * Rational(j));
  }
  s.coroot_gram = {{2.0}};
  return s;
}

MeasureSpec general_measure(const RootSystem& rs, const ExponentTable& table) {
  check_level(table.level);
  MeasureSpec s;
  s.source = MeasureSpec::Source::General;
  s.label = rs.label;
  s.level = table.level;
  s.truncation = table.horizon;
  for (const auto& e : table.eta) s.eta_exponents.push_back(e.exponent);
  for (const auto& e : table.zeta) s.zeta_exponents.push_back(e.exponent);
  s.chi_rates = table.chi_rates;
  s.cartan_dim = rs.rank;
  s.coroot_gram.assign(static_cast<std::size_t>(rs.rank), std::vector<double>(static_cast<std::size_t>(rs.rank)));
  for (std::size_t i = 0; i < s.coroot_gram.size(); ++i)
    for (std::size_t j = 0; j < s.coroot_gram.size(); ++j)
      s.coroot_gram[i][j] = to_double(Rational(4) * rs.form[i][j] / (rs.form[i][i] * rs.form[j][j]));
  return s;
}

cplx sample_power_law(double p, Rng& rng) {
  if (!(p > 1.0)) throw InvalidInput("power-law exponent must exceed 1");
  std::uniform_real_distribution<double> unif(0.0, 1.0);
  const double u = unif(rng);
  const double phase = 2.0 * kPi * unif(rng);
  const double r2 = std::expm1(-std::log1p(-u) / (p - 1.0));
  return std::polar(std::sqrt(r2), phase);
}

RootCoordsSU2 sample_coords(const MeasureSpec& spec, Rng& rng) {
  check_level(spec.level);
  if (spec.source != MeasureSpec::Source::Su2) throw InvalidInput("sample_coords: spec is not an SU(2) spec");
  RootCoordsSU2 c = RootCoordsSU2::zero(spec.truncation, to_double(spec.level));
  std::uniform_real_distribution<double> unif(0.0, 1.0);
  std::normal_distribution<double> normal(0.0, 1.0);
  for (int i = 0; i < spec.truncation; ++i) c.eta[static_cast<std::size_t>(i)] = sample_power_law(spec.eta_exponent(i), rng);
  for (int j = 1; j <= spec.truncation; ++j) {
    const double sd = std::sqrt(0.5 / spec.chi_rate(j));
    const double re = normal(rng);
    const double im = normal(rng);
    c.chi[static_cast<std::size_t>(j - 1)] = {sd * re, sd * im};
  }
  c.chi0 = {0.0, 2.0 * kPi * unif(rng)};
  for (int k = 1; k <= spec.truncation; ++k) c.zeta[static_cast<std::size_t>(k - 1)] = sample_power_law(spec.zeta_exponent(k), rng);
  return c;
}

GeneralCoords sample_general_coords(const MeasureSpec& spec, Rng& rng) {
  check_level(spec.level);
  GeneralCoords c;
  std::uniform_real_distribution<double> unif(0.0, 1.0);
  std::normal_distribution<double> normal(0.0, 1.0);
  for (std::size_t i = 0; i < spec.eta_exponents.size(); ++i) c.eta.push_back(sample_power_law(spec.eta_exponent(static_cast<int>(i)), rng));
  // c^* G c = |w|^2 for c = L^{-T} w, G = L L^T.
  const Eigen::LLT<Eigen::MatrixXd> llt(gram_matrix(spec));
  const Eigen::MatrixXcd lt = Eigen::MatrixXd(llt.matrixU()).cast<cplx>();
  for (std::size_t j = 1; j <= spec.chi_rates.size(); ++j) {
    const double sd = std::sqrt(0.5 / spec.chi_rate(static_cast<int>(j)));
    Eigen::VectorXcd w(spec.cartan_dim);
    for (int a = 0; a < spec.cartan_dim; ++a) {
      const double re = normal(rng);
      const double im = normal(rng);
      w(a) = cplx(sd * re, sd * im);
    }
    const Eigen::VectorXcd coeffs = lt.triangularView<Eigen::Upper>().solve(w);
    c.chi.emplace_back(coeffs.data(), coeffs.data() + coeffs.size());
  }
  for (int a = 0; a < spec.cartan_dim; ++a) c.chi0.push_back(2.0 * kPi * unif(rng));
  for (std::size_t k = 1; k <= spec.zeta_exponents.size(); ++k) c.zeta.push_back(sample_power_law(spec.zeta_exponent(static_cast<int>(k)), rng));
  return c;
}

double log_density(const MeasureSpec& spec, const RootCoordsSU2& coords) {
  double s = 0.0;
  for (int i = 0; i < spec.truncation; ++i) s += log_power_law(spec.eta_exponent(i), coords.eta_at(i));
  for (int j = 1; j <= spec.truncation; ++j) {
    const double r = spec.chi_rate(j);
    s += std::log(r / kPi) - r * std::norm(coords.chi_at(j));
  }
  for (int k = 1; k <= spec.truncation; ++k) s += log_power_law(spec.zeta_exponent(k), coords.zeta_at(k));
  return s;
}

double log_density(const MeasureSpec& spec, const GeneralCoords& coords) {
  if (coords.eta.size() != spec.eta_exponents.size() || coords.zeta.size() != spec.zeta_exponents.size() ||
      coords.chi.size() != spec.chi_rates.size())
    throw InvalidInput("log_density: coordinates do not match the spec truncation");
  const Eigen::MatrixXcd g = gram_matrix(spec).cast<cplx>();
  double s = 0.0;
  for (std::size_t i = 0; i < coords.eta.size(); ++i) s += log_power_law(spec.eta_exponent(static_cast<int>(i)), coords.eta[i]);
  for (std::size_t j = 0; j < coords.chi.size(); ++j) {
    const double r = spec.chi_rate(static_cast<int>(j + 1));
    const Eigen::Map<const Eigen::VectorXcd> c(coords.chi[j].data(), static_cast<Eigen::Index>(coords.chi[j].size()));
    const double q = (c.adjoint() * g * c)(0, 0).real();
    s += spec.cartan_dim * std::log(r / kPi) - r * q;
  }
  for (std::size_t k = 0; k < coords.zeta.size(); ++k) s += log_power_law(spec.zeta_exponent(static_cast<int>(k + 1)), coords.zeta[k]);
  return s;
}

double hellinger_power_law(double p) {
  if (!(p > 1.0)) throw InvalidInput("hellinger: exponent must exceed 1");
  // Bhattacharyya coefficient sqrt(p (p - 1)) * int_0^inf (1 + u)^{-p/2} e^{-p u / 2} du.
  boost::math::quadrature::exp_sinh<double> integrator;
  double error = 0.0;
  const double integral = integrator.integrate(
      [p](double u) { return std::exp(-0.5 * p * (std::log1p(u) + u)); }, 0.0,
      std::numeric_limits<double>::infinity(), 1e-14, &error);
  if (!(error <= 1e-10 * std::max(1.0, std::abs(integral))))
    throw ConvergenceFailure("hellinger: quadrature did not converge");
  const double bc = std::sqrt(p * (p - 1.0)) * integral;
  return std::clamp(2.0 - 2.0 * bc, 0.0, 2.0);
}

double hellinger_vs_gaussian(const MeasureSpec& spec, int index, CoordKind kind) {
  switch (kind) {
    case CoordKind::Chi:
      spec.chi_rate(index);
      return 0.0;
    case CoordKind::Eta: return hellinger_power_law(spec.eta_exponent(index));
    case CoordKind::Zeta: return hellinger_power_law(spec.zeta_exponent(index));
  }
  return 0.0;
}

}  // namespace looplab
