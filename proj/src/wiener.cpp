#include "looplab/wiener.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "looplab/birkhoff.hpp"
#include "looplab/errors.hpp"
#include "looplab/recovery.hpp"

namespace looplab {

namespace {

constexpr double kPi = std::numbers::pi;
const cplx kI{0.0, 1.0};

std::array<Matrix, 3> pauli() {
  Matrix s1 = Matrix::Zero(2, 2), s2 = Matrix::Zero(2, 2), s3 = Matrix::Zero(2, 2);
  s1(0, 1) = 1.0;
  s1(1, 0) = 1.0;
  s2(0, 1) = -kI;
  s2(1, 0) = kI;
  s3(0, 0) = 1.0;
  s3(1, 1) = -1.0;
  return {s1, s2, s3};
}

double fubini_study_statistic(cplx eta) {
  const double n = std::norm(eta);
  return n / (1.0 + n);
}

int auto_cutoff(const LaurentLoop& g, int requested) {
  return requested > 0 ? std::max(requested, g.band_width()) : std::max(64, g.band_width());
}

void finish_eta0(Eta0Report& r, std::size_t attempted) {
  r.failure_rate = attempted == 0 ? 0.0 : static_cast<double>(r.failures) / static_cast<double>(attempted);
  if (r.failure_rate > 0.5) throw ExperimentDegenerate("eta0 experiment: more than half of the loops failed to factorize");
  std::vector<double> stat;
  stat.reserve(r.eta0.size());
  for (const cplx& e : r.eta0) stat.push_back(fubini_study_statistic(e));
  r.ks = ks_one_sample(stat, [](double u) { return std::clamp(u, 0.0, 1.0); });
}

// Runs make(s) -> (g, moved g) for each sample and compares observables.
InvarianceReport run_pairs(std::size_t n, const InvarianceOptions& opt,
                           const std::function<std::pair<LaurentLoop, LaurentLoop>(std::size_t)>& make) {
  std::vector<std::optional<double>> a(n), b(n);
  parallel_for(n, opt.workers, [&](std::size_t s) {
    const auto [g, h] = make(s);
    try {
      a[s] = observe(g, opt.observable, auto_cutoff(g, opt.cutoff));
    } catch (const NotInTopStratum&) {
    } catch (const ConvergenceFailure&) {
    }
    try {
      b[s] = observe(h, opt.observable, auto_cutoff(h, opt.cutoff));
    } catch (const NotInTopStratum&) {
    } catch (const ConvergenceFailure&) {
    }
  });
  InvarianceReport r;
  for (std::size_t s = 0; s < n; ++s) {
    if (a[s]) r.base.push_back(*a[s]);
    else ++r.failures;
    if (b[s]) r.moved.push_back(*b[s]);
    else ++r.failures;
    if (a[s] && b[s]) r.max_pointwise_diff = std::max(r.max_pointwise_diff, std::abs(*a[s] - *b[s]));
  }
  r.failure_rate = n == 0 ? 0.0 : static_cast<double>(r.failures) / static_cast<double>(2 * n);
  if (r.failure_rate > 0.5 || r.base.empty() || r.moved.empty())
    throw ExperimentDegenerate("invariance experiment: more than half of the loops failed to factorize");
  r.ks = ks_two_sample(r.base, r.moved);
  return r;
}

}  // namespace

void WienerConfig::validate() const {
  if (!(beta > 0.0)) throw InvalidInput("beta must be positive");
  if (steps < 8) throw InvalidInput("steps must be at least 8");
  if (band < 0 || cutoff < 0) throw InvalidInput("band and cutoff must be non-negative");
  if (2 * resolved_band() >= steps) throw InvalidInput("band must be below steps / 2");
}

int WienerConfig::resolved_band() const { return band > 0 ? band : std::max(1, steps / 4); }

int WienerConfig::resolved_cutoff() const { return cutoff > 0 ? std::max(cutoff, resolved_band()) : std::max(64, resolved_band()); }

Matrix su2_exp(const double x[3]) {
  static const auto s = pauli();
  const double c[3] = {x[0] / std::sqrt(2.0), x[1] / std::sqrt(2.0), x[2] / std::sqrt(2.0)};
  const double theta = std::sqrt(c[0] * c[0] + c[1] * c[1] + c[2] * c[2]);
  Matrix out = std::cos(theta) * Matrix::Identity(2, 2);
  if (theta == 0.0) return out;
  const double f = std::sin(theta) / theta;
  for (int a = 0; a < 3; ++a) out += kI * (f * c[a]) * s[static_cast<std::size_t>(a)];
  return out;
}

std::optional<std::array<double, 3>> su2_log(const Matrix& g, double margin) {
  static const auto s = pauli();
  const double half_trace = std::clamp(0.5 * g.trace().real(), -1.0, 1.0);
  const double theta = std::acos(half_trace);
  if (kPi - theta < margin) return std::nullopt;
  std::array<double, 3> x{0.0, 0.0, 0.0};
  if (theta < 1e-300) return x;
  const Matrix n_sigma = (g - half_trace * Matrix::Identity(2, 2)) / (kI * std::sin(theta));
  for (int a = 0; a < 3; ++a) {
    const double n_a = 0.5 * (s[static_cast<std::size_t>(a)] * n_sigma).trace().real();
    x[static_cast<std::size_t>(a)] = std::sqrt(2.0) * theta * n_a;
  }
  return x;
}

BrownianLoop sample_brownian_loop(const WienerConfig& cfg, Rng& rng) {
  cfg.validate();
  const double sd = std::sqrt(1.0 / cfg.beta / cfg.steps);
  std::normal_distribution<double> normal(0.0, 1.0);
  BrownianLoop out;
  std::vector<Matrix> walk(static_cast<std::size_t>(cfg.steps) + 1);
  std::optional<std::array<double, 3>> closing;
  while (true) {
    walk[0] = Matrix::Identity(2, 2);
    for (int k = 1; k <= cfg.steps; ++k) {
      double x[3];
      for (double& v : x) v = sd * normal(rng);
      walk[static_cast<std::size_t>(k)] = walk[static_cast<std::size_t>(k - 1)] * su2_exp(x);
    }
    closing = su2_log(walk.back());
    if (closing) break;
    ++out.resamples;
  }
  out.path.resize(walk.size());
  for (int k = 0; k <= cfg.steps; ++k) {
    const double f = -static_cast<double>(k) / cfg.steps;
    const double y[3] = {f * (*closing)[0], f * (*closing)[1], f * (*closing)[2]};
    out.path[static_cast<std::size_t>(k)] = walk[static_cast<std::size_t>(k)] * su2_exp(y);
  }
  out.endpoint_defect = (out.path.back() - out.path.front()).norm();
  const int band = cfg.resolved_band();
  out.loop = fourier_project(std::span<const Matrix>(out.path.data(), static_cast<std::size_t>(cfg.steps)), -band, band);
  return out;
}

Observable parse_observable(const std::string& name) {
  if (name == "a0") return Observable::A0;
  if (name == "abs_eta0") return Observable::AbsEta0;
  if (name == "abs_zeta1") return Observable::AbsZeta1;
  throw InvalidInput("unknown observable '" + name + "' (expected a0, abs_eta0 or abs_zeta1)");
}

std::string observable_name(Observable o) {
  switch (o) {
    case Observable::A0: return "a0";
    case Observable::AbsEta0: return "abs_eta0";
    case Observable::AbsZeta1: return "abs_zeta1";
  }
  return "a0";
}

double observe(const LaurentLoop& g, Observable o, int cutoff) {
  const BirkhoffLeading b = birkhoff_leading(g, cutoff);
  switch (o) {
    case Observable::A0: return ldu_2x2(b.zero).a0;
    case Observable::AbsEta0: {
      const Ldu2 d = ldu_2x2(b.zero);
      return std::abs(d.lower(1, 0));
    }
    case Observable::AbsZeta1: return std::abs(b.plus1(1, 0));
  }
  return 0.0;
}

Eta0Report eta0_pushforward_experiment(const WienerConfig& cfg) {
  cfg.validate();
  const std::size_t n = cfg.n_samples;
  std::vector<std::optional<cplx>> eta(n);
  std::vector<int> resamples(n, 0);
  std::vector<double> endpoint(n, 0.0), unitarity(n, 0.0);
  const int cutoff = cfg.resolved_cutoff();
  parallel_for(n, cfg.workers, [&](std::size_t s) {
    Rng rng = make_rng(cfg.seed, s);
    const BrownianLoop b = sample_brownian_loop(cfg, rng);
    resamples[s] = b.resamples;
    endpoint[s] = b.endpoint_defect;
    unitarity[s] = unitarity_defect(b.loop, cfg.steps);
    try {
      eta[s] = leading_coords(b.loop, cutoff).eta0;
    } catch (const NotInTopStratum&) {
    } catch (const ConvergenceFailure&) {
    }
  });
  Eta0Report r;
  double total_unitarity = 0.0;
  for (std::size_t s = 0; s < n; ++s) {
    if (eta[s]) r.eta0.push_back(*eta[s]);
    else ++r.failures;
    r.resamples += static_cast<std::size_t>(resamples[s]);
    r.max_endpoint_defect = std::max(r.max_endpoint_defect, endpoint[s]);
    total_unitarity += unitarity[s];
  }
  r.mean_unitarity_defect = n == 0 ? 0.0 : total_unitarity / static_cast<double>(n);
  finish_eta0(r, n);
  return r;
}

Eta0Report eta0_reference_experiment(std::size_t n, std::uint64_t seed, int truncation, int workers) {
  const MeasureSpec spec = su2_measure(Rational(0), truncation);
  std::vector<std::optional<cplx>> eta(n);
  parallel_for(n, workers, [&](std::size_t s) {
    Rng rng = make_rng(seed, s);
    const LaurentLoop g = synthesize(sample_coords(spec, rng));
    try {
      eta[s] = leading_coords(g, auto_cutoff(g, 0)).eta0;
    } catch (const NotInTopStratum&) {
    } catch (const ConvergenceFailure&) {
    }
  });
  Eta0Report r;
  for (const auto& e : eta) {
    if (e) r.eta0.push_back(*e);
    else ++r.failures;
  }
  finish_eta0(r, n);
  return r;
}

InvarianceReport invariance_experiment(const MeasureSpec& spec, const LaurentLoop& h, const InvarianceOptions& opt) {
  if (h.dim() != 2) throw InvalidInput("invariance_experiment: h must be 2x2");
  if (unitarity_defect(h) > 1e-8) throw InvalidInput("invariance_experiment: h is not unitary on the circle");
  return run_pairs(opt.n, opt, [&](std::size_t s) {
    Rng rng = make_rng(opt.seed, s);
    LaurentLoop g = synthesize(sample_coords(spec, rng));
    LaurentLoop moved = multiply(h, g);
    return std::make_pair(std::move(g), std::move(moved));
  });
}

InvarianceReport reparam_invariance_experiment(const MeasureSpec& spec, const Mobius& sigma, const InvarianceOptions& opt,
                                               int band_out) {
  return run_pairs(opt.n, opt, [&](std::size_t s) {
    Rng rng = make_rng(opt.seed, s);
    LaurentLoop g = synthesize(sample_coords(spec, rng));
    const int band = band_out > 0 ? band_out : (sigma.is_rotation() ? g.band_width() : 2 * g.band_width() + 16);
    LaurentLoop moved = mobius_reparam(g, sigma, band);
    return std::make_pair(std::move(g), std::move(moved));
  });
}

InvarianceReport measure_comparison_experiment(const MeasureSpec& a, const MeasureSpec& b, const InvarianceOptions& opt) {
  return run_pairs(opt.n, opt, [&](std::size_t s) {
    Rng ra = make_rng(opt.seed, 2 * s);
    Rng rb = make_rng(opt.seed, 2 * s + 1);
    return std::make_pair(synthesize(sample_coords(a, ra)), synthesize(sample_coords(b, rb)));
  });
}

}  // namespace looplab
