#include "looplab/transforms.hpp"

#include <array>
#include <cmath>
#include <numbers>

#include "looplab/birkhoff.hpp"
#include "looplab/errors.hpp"

namespace looplab {

namespace {

constexpr double kPi = std::numbers::pi;
const cplx kI{0.0, 1.0};

void check_level(double level) {
  if (!(level > -1.0)) throw InvalidLevel("level must exceed -1");
}

TransformResult summarize(const std::vector<cplx>& values, int truncation, std::string method) {
  TransformResult r;
  r.n_samples = values.size();
  r.truncation = truncation;
  r.method = std::move(method);
  if (values.empty()) return r;
  cplx mean{};
  for (const cplx& v : values) mean += v;
  mean /= static_cast<double>(values.size());
  double ss = 0.0;
  for (const cplx& v : values) ss += std::norm(v - mean);
  r.value = mean;
  if (values.size() > 1) r.std_error = std::sqrt(ss / static_cast<double>(values.size() - 1) / static_cast<double>(values.size()));
  return r;
}

// <v, alpha> / <alpha, alpha> for v in the simple-root basis.
double root_ratio(const RootSystem& rs, const std::vector<double>& v, const IntVec& alpha) {
  const Rational len = rs.inner(alpha, alpha);
  double s = 0.0;
  for (int i = 0; i < rs.rank; ++i) {
    Rational ai = 0;
    for (int j = 0; j < rs.rank; ++j) ai += rs.form[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] * Rational(alpha[static_cast<std::size_t>(j)]);
    s += v[static_cast<std::size_t>(i)] * to_double(ai / len);
  }
  return s;
}

}  // namespace

cplx sine_formula_su2(double level, double lambda) {
  check_level(level);
  const double c = kPi / (2.0 + level);
  return std::sin(c) / std::sin(c * cplx(1.0, -lambda));
}

cplx marginal_factor(FactorKind kind, int index, double level, double lambda) {
  check_level(level);
  if (kind == FactorKind::Eta) {
    if (index < 0) throw InvalidInput("eta index must be non-negative");
    const double a = (level + 2.0) * index + 1.0;
    return a / cplx(a, -lambda);
  }
  if (index < 1) throw InvalidInput("zeta index must be positive");
  const double b = (level + 2.0) * index - 1.0;
  return b / cplx(b, lambda);
}

cplx partial_product(double level, double lambda, int n) {
  check_level(level);
  cplx p{1.0, 0.0};
  for (int i = 0; i < n; ++i)
    p *= marginal_factor(FactorKind::Eta, i, level, lambda) * marginal_factor(FactorKind::Zeta, i + 1, level, lambda);
  return p;
}

cplx partial_product_unpaired(double level, double lambda, int n) {
  check_level(level);
  cplx eta{1.0, 0.0};
  cplx zeta{1.0, 0.0};
  for (int i = 0; i < n; ++i) eta *= marginal_factor(FactorKind::Eta, i, level, lambda);
  for (int k = 1; k <= n; ++k) zeta *= marginal_factor(FactorKind::Zeta, k, level, lambda);
  return eta * zeta;
}

TransformResult mc_diagonal_transform(const MeasureSpec& spec, double lambda, std::size_t n, std::uint64_t seed,
                                      int workers) {
  if (spec.level <= Rational(-1)) throw InvalidLevel("level must exceed -1");
  if (spec.source != MeasureSpec::Source::Su2) throw InvalidInput("mc_diagonal_transform: SU(2) spec required");
  std::vector<cplx> values(n);
  parallel_for(n, workers, [&](std::size_t s) {
    Rng rng = make_rng(seed, s);
    double phase = 0.0;
    for (int i = 0; i < spec.truncation; ++i) phase += std::log1p(std::norm(sample_power_law(spec.eta_exponent(i), rng)));
    for (int k = 1; k <= spec.truncation; ++k) phase -= std::log1p(std::norm(sample_power_law(spec.zeta_exponent(k), rng)));
    values[s] = std::polar(1.0, lambda * phase);
  });
  return summarize(values, spec.truncation, "monte-carlo");
}

cplx general_sine_formula(const RootSystem& rs, double level, const std::vector<double>& lambda) {
  check_level(level);
  if (static_cast<int>(lambda.size()) != rs.rank) throw InvalidInput("lambda has wrong rank");
  const double c = kPi / (level + rs.dual_coxeter);
  // 2 rho in the simple-root basis: sum of positive roots.
  std::vector<double> two_rho(static_cast<std::size_t>(rs.rank), 0.0);
  for (const IntVec& a : rs.positive_roots)
    for (int i = 0; i < rs.rank; ++i) two_rho[static_cast<std::size_t>(i)] += a[static_cast<std::size_t>(i)];
  cplx value{1.0, 0.0};
  for (const IntVec& a : rs.positive_roots) {
    const double rho_part = root_ratio(rs, two_rho, a);
    const double lam_part = root_ratio(rs, lambda, a);
    const cplx den = std::sin(c * cplx(rho_part, -lam_part));
    if (std::abs(den) < 1e-300) throw DomainError("general_sine_formula: pole");
    value *= std::sin(c * rho_part) / den;
  }
  return value;
}

cplx complex_gamma(cplx z) {
  static constexpr std::array<double, 9> kCoef = {0.99999999999980993,  676.5203681218851,     -1259.1392167224028,
                                                  771.32342877765313,   -176.61502916214059,   12.507343278686905,
                                                  -0.13857109526572012, 9.9843695780195716e-6, 1.5056327351493116e-7};
  if (z.imag() == 0.0 && z.real() <= 0.0 && z.real() == std::floor(z.real()))
    throw DomainError("complex_gamma: pole at a non-positive integer");
  if (z.real() < 0.5) return kPi / (std::sin(kPi * z) * complex_gamma(1.0 - z));
  z -= 1.0;
  cplx x = kCoef[0];
  for (int i = 1; i < 9; ++i) x += kCoef[static_cast<std::size_t>(i)] / (z + static_cast<double>(i));
  const cplx t = z + 7.5;
  return std::sqrt(2.0 * kPi) * std::pow(t, z + 0.5) * std::exp(-t) * x;
}

cplx hc_gamma_transform(const RootSystem& rs, double level, const std::vector<double>& lambda) {
  check_level(level);
  if (static_cast<int>(lambda.size()) != rs.rank) throw InvalidInput("lambda has wrong rank");
  const double c = kPi / (level + rs.dual_coxeter);
  cplx value{1.0, 0.0};
  for (const IntVec& a : rs.positive_roots) value *= complex_gamma(1.0 + kI * c * root_ratio(rs, lambda, a));
  return value;
}

std::vector<double> haar_su2_a0_squared(std::size_t n, std::uint64_t seed) {
  std::vector<double> out(n);
  for (std::size_t s = 0; s < n; ++s) {
    Rng rng = make_rng(seed, s);
    std::normal_distribution<double> normal(0.0, 1.0);
    std::array<double, 4> q{};
    double norm2 = 0.0;
    for (double& v : q) {
      v = normal(rng);
      norm2 += v * v;
    }
    const double r = std::sqrt(norm2);
    const cplx a(q[0] / r, q[1] / r);
    const cplx b(q[2] / r, q[3] / r);
    Matrix g(2, 2);
    g << a, -std::conj(b), b, std::conj(a);
    const double a0 = ldu_2x2(g).a0;
    out[s] = a0 * a0;
  }
  return out;
}

TransformResult finite_hc_check(double lambda, std::size_t n, std::uint64_t seed) {
  const auto a2 = haar_su2_a0_squared(n, seed);
  std::vector<cplx> values;
  values.reserve(n);
  // a0^{-2 i lambda} = exp(-i lambda log a0^2)
  for (double v : a2) values.push_back(std::polar(1.0, -lambda * std::log(v)));
  return summarize(values, 0, "haar-su2");
}

}  // namespace looplab
