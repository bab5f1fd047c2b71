#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "looplab/ks.hpp"
#include "looplab/laurent_loop.hpp"
#include "looplab/measures.hpp"
#include "looplab/random.hpp"

namespace looplab {

struct WienerConfig {
  double beta = 1.0;  ///< inverse temperature; total diffusion time t = 1 / beta
  int steps = 256;
  std::size_t n_samples = 1000;
  std::uint64_t seed = 0;
  int band = 0;    ///< Fourier band of the projected loop; 0 picks steps / 4
  int cutoff = 0;  ///< Toeplitz cutoff; 0 picks max(64, band)
  int workers = 1;

  void validate() const;
  int resolved_band() const;
  int resolved_cutoff() const;
};

struct BrownianLoop {
  LaurentLoop loop;
  std::vector<Matrix> path;  ///< pinned samples at theta_k = 2 pi k / steps, k = 0..steps
  int resamples = 0;         ///< draws rejected because the endpoint was too close to -I
  double endpoint_defect = 0.0;
};

/// su(2) exponential of sum_a x_a i sigma_a / sqrt(2).
Matrix su2_exp(const double x[3]);
/// Principal logarithm of an SU(2) matrix as coefficients of i sigma_a / sqrt(2). Returns
/// nullopt when the rotation angle is within `margin` of pi (branch ambiguity).
std::optional<std::array<double, 3>> su2_log(const Matrix& g, double margin = 1e-6);

/// Based Brownian loop: random walk with Gaussian su(2) increments of variance t / steps,
/// closed by the geodesic correction g_k exp(-(k / steps) log g_steps), projected to the band.
BrownianLoop sample_brownian_loop(const WienerConfig& cfg, Rng& rng);

/// Observable extracted from the Birkhoff data of a loop.
enum class Observable { A0, AbsEta0, AbsZeta1 };
Observable parse_observable(const std::string& name);
std::string observable_name(Observable o);
/// Throws NotInTopStratum / ConvergenceFailure off the top stratum.
double observe(const LaurentLoop& g, Observable o, int cutoff);

struct Eta0Report {
  std::vector<cplx> eta0;
  KsResult ks;  ///< |eta0|^2 / (1 + |eta0|^2) against Uniform[0, 1]
  std::size_t failures = 0;
  double failure_rate = 0.0;
  std::size_t resamples = 0;
  double max_endpoint_defect = 0.0;
  double mean_unitarity_defect = 0.0;
};

/// eta_0 of Brownian loops against the Fubini-Study law. Throws ExperimentDegenerate when more
/// than half of the loops cannot be factorized.
Eta0Report eta0_pushforward_experiment(const WienerConfig& cfg);

/// Same statistic for loops synthesized from exact draws of the level-0 product measure and
/// refactorized; this is the harness self-test.
Eta0Report eta0_reference_experiment(std::size_t n, std::uint64_t seed, int truncation = 4, int workers = 1);

struct InvarianceReport {
  std::vector<double> base;
  std::vector<double> moved;
  KsResult ks;
  std::size_t failures = 0;
  double failure_rate = 0.0;
  /// max |observable(g) - observable(moved g)| over samples where both succeed
  double max_pointwise_diff = 0.0;
};

struct InvarianceOptions {
  Observable observable = Observable::A0;
  std::size_t n = 1000;
  std::uint64_t seed = 0;
  int cutoff = 0;  ///< 0 picks max(64, band of the loop)
  int workers = 1;
};

/// Compares observable(g) with observable(h g) for g synthesized from exact draws of `spec`.
InvarianceReport invariance_experiment(const MeasureSpec& spec, const LaurentLoop& h, const InvarianceOptions& opt);

/// Compares observable(g) with observable(g o sigma). `band_out` bounds the reparametrized loop;
/// 0 picks 2 * band + 16 (rotations keep the band exactly).
InvarianceReport reparam_invariance_experiment(const MeasureSpec& spec, const Mobius& sigma, const InvarianceOptions& opt,
                                               int band_out = 0);

/// Power control: observable under `a` versus under `b` with independent streams.
InvarianceReport measure_comparison_experiment(const MeasureSpec& a, const MeasureSpec& b, const InvarianceOptions& opt);

}  // namespace looplab
