#pragma once

#include <array>

#include "looplab/random.hpp"
#include "looplab/root_coords.hpp"

namespace looplab {

/// Finite test coordinates: eta_0..eta_{T-1}, chi_1..chi_T, zeta_1..zeta_T with T = max_index,
/// at most `support` nonzero entries of modulus <= max_modulus, uniform phases.
struct EnsembleOptions {
  int max_index = 4;
  int support = 8;
  double max_modulus = 0.5;
};

RootCoordsSU2 random_test_coords(Rng& rng, double level, const EnsembleOptions& opt = {});

/// Numeric versus closed-form values of log det(A^*A), log det(A_1^*A_1) and log a0^2.
struct IdentityCheck {
  std::array<double, 3> numeric{};
  std::array<double, 3> closed_form{};
  std::array<double, 3> rel_error{};  ///< |exp(numeric - closed_form) - 1|
};

/// Determinants from the truncated Toeplitz sections at `cutoff`; a0 from the triangular
/// factorization.
IdentityCheck identity_check(const RootCoordsSU2& coords, int cutoff);

struct RoundtripCheck {
  double max_coord_error = 0.0;
  double resynthesis_residual = 0.0;
  bool refined = false;
  double birkhoff_residual = 0.0;
  double a0_triangular = 0.0;
  double a0_dets = 0.0;
};

RoundtripCheck roundtrip_check(const RootCoordsSU2& coords, int cutoff, double tol = 1e-7);

}  // namespace looplab
