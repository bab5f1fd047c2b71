#pragma once

#include "looplab/laurent_loop.hpp"
#include "looplab/root_coords.hpp"

namespace looplab {

struct RecoveryOptions {
  int truncation = 8;  ///< number of coordinates of each kind to recover
  int cutoff = 0;      ///< Toeplitz cutoff; 0 picks max(64, band width of the loop)
  double tol = 1e-7;   ///< max grid residual of the resynthesized loop
  bool allow_refinement = true;
};

struct RecoveryReport {
  RootCoordsSU2 coords;
  double residual = 0.0;  ///< grid distance between g and synthesize(coords)
  bool refined = false;   ///< least-squares fallback was needed
};

/// Root subgroup coordinates of a unitary loop on the top stratum.
///
/// Peeling order: eta_0 from the LDU of the Birkhoff middle factor; zeta_1, zeta_2, ... by
/// Schur steps on the ratio of the second row of g_+; eta_1, eta_2, ... the same way on the
/// Weyl-flipped adjoint of k1(eta_0) g; chi from the phase of k1 g k2^*.
RecoveryReport recover_coords_report(const LaurentLoop& g, double level_hint, const RecoveryOptions& options);

RootCoordsSU2 recover_coords(const LaurentLoop& g, double level_hint, double tol, int truncation);

/// Schur peeling of a power series r with r(0) = ... = r^{(first-1)}(0) = 0 (first >= 1) or
/// any r (first = 0). Returns coordinates for indices first..first+count-1 and leaves the
/// remainder series in `r`.
std::vector<cplx> schur_peel(std::vector<cplx>& r, int first, int count);

/// eta_0 and zeta_1 from the Birkhoff data of an arbitrary top-stratum loop; these need
/// only g_0 and the first two modes of g_+.
struct LeadingCoords {
  cplx eta0;
  cplx zeta1;
};
LeadingCoords leading_coords(const LaurentLoop& g, int cutoff);

}  // namespace looplab
