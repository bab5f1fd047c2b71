#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "looplab/measures.hpp"
#include "looplab/root_system.hpp"

namespace looplab {

struct TransformResult {
  cplx value{1.0, 0.0};
  double std_error = 0.0;  ///< standard error of the complex mean; 0 for closed forms
  std::size_t n_samples = 0;
  int truncation = 0;
  std::string method;
};

/// sin(pi / (2 + l)) / sin(pi / (2 + l) (1 - i lambda)).
cplx sine_formula_su2(double level, double lambda);

enum class FactorKind { Eta, Zeta };

/// E[(1 + |eta_i|^2)^{i lambda}] = ((l+2) i + 1) / ((l+2) i + 1 - i lambda) or
/// E[(1 + |zeta_k|^2)^{-i lambda}] = ((l+2) k - 1) / ((l+2) k - 1 + i lambda).
cplx marginal_factor(FactorKind kind, int index, double level, double lambda);

/// prod_{i<N} eta factor * prod_{k<=N} zeta factor, multiplied pairwise (eta_i with zeta_{i+1}).
cplx partial_product(double level, double lambda, int n);
/// Same product with all eta factors first, then all zeta factors.
cplx partial_product_unpaired(double level, double lambda, int n);

/// Monte Carlo mean of prod (1 + |eta_i|^2)^{i lambda} prod (1 + |zeta_k|^2)^{-i lambda} over exact
/// draws from an SU(2) spec (truncation taken from the spec).
TransformResult mc_diagonal_transform(const MeasureSpec& spec, double lambda, std::size_t n, std::uint64_t seed,
                                      int workers = 1);

/// prod_{alpha > 0} sin(pi/(l+g) <2 rho, alpha>/<alpha,alpha>) / sin(pi/(l+g) <2 rho - i lambda, alpha>/<alpha,alpha>)
/// with lambda given in the simple-root basis. Throws DomainError at a pole.
cplx general_sine_formula(const RootSystem& rs, double level, const std::vector<double>& lambda);

/// prod_{alpha > 0} Gamma(1 + i pi/(l+g) <lambda, alpha>/<alpha,alpha>), lambda in the simple-root basis.
cplx hc_gamma_transform(const RootSystem& rs, double level, const std::vector<double>& lambda);

/// Complex Gamma function (Lanczos with reflection), relative accuracy about 1e-14.
/// Throws DomainError at the poles 0, -1, -2, ...
cplx complex_gamma(cplx z);

/// |g_11|^2 for n Haar-random SU(2) matrices.
std::vector<double> haar_su2_a0_squared(std::size_t n, std::uint64_t seed);

/// Monte Carlo mean of a0(g)^{-2 i lambda} over Haar SU(2), a0 from the LDU of g.
TransformResult finite_hc_check(double lambda, std::size_t n, std::uint64_t seed);

}  // namespace looplab
