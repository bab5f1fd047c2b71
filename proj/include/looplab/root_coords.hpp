#pragma once

#include <vector>

#include "looplab/laurent_loop.hpp"

namespace looplab {

/// SU(2) root subgroup coordinates g = k1^* diag(e^chi, e^-chi) k2.
///
/// With truncation T the retained coordinates are eta_0..eta_{T-1}, chi_1..chi_T and
/// zeta_1..zeta_T; absent entries are zero.
struct RootCoordsSU2 {
  double level = 0.0;
  std::vector<cplx> eta;   ///< eta[i] = eta_i
  cplx chi0{0.0, 0.0};     ///< purely imaginary, mod 2 pi i
  std::vector<cplx> chi;   ///< chi[j - 1] = chi_j
  std::vector<cplx> zeta;  ///< zeta[k - 1] = zeta_k

  static RootCoordsSU2 zero(int truncation, double level = 0.0);

  int truncation() const;
  cplx eta_at(int i) const;
  cplx chi_at(int j) const;
  cplx zeta_at(int k) const;
  /// Number of nonzero entries among eta, chi, zeta (chi0 excluded).
  int support() const;
  /// Throws InvalidInput / InvalidLevel when invariants fail.
  void validate() const;
};

/// (1 + |c|^2)^{-1/2}
double unitary_scale(cplx c);

/// Single k1 factor scale * [[1, -conj(eta) z^n], [eta z^-n, 1]].
LaurentLoop k1_factor(cplx eta, int n);
/// Single k2 factor scale * [[1, zeta z^-n], [-conj(zeta) z^n, 1]].
LaurentLoop k2_factor(cplx zeta, int n);

/// F(eta_{N-1}) ... F(eta_0), highest index leftmost, projected to [-band, band].
LaurentLoop k1_synthesize(std::span<const cplx> eta, int band);
/// F(zeta_N) ... F(zeta_1), highest index leftmost, projected to [-band, band].
LaurentLoop k2_synthesize(std::span<const cplx> zeta, int band);

struct TorusLoop {
  LaurentLoop loop;
  double aliasing_error = 0.0;  ///< max error against exact e^chi on an independent grid
};

/// diag(e^chi, e^-chi) with chi(z) = chi0 + sum_j (chi_j z^j - conj(chi_j) z^-j), by grid
/// exponentiation and projection to [-band, band]. Throws ConvergenceFailure when the
/// aliasing error exceeds `threshold`.
TorusLoop torus_loop(cplx chi0, std::span<const cplx> chi, int band, double threshold = 1e-10);

/// Smallest band (searched in steps) whose torus aliasing error is below `threshold`.
int torus_band_for(std::span<const cplx> chi, double threshold = 1e-12);

/// star(k1) * torus * k2 with the torus projected to `torus_band`.
LaurentLoop synthesize(const RootCoordsSU2& coords, int torus_band);
/// Same with torus_band_for(coords.chi).
LaurentLoop synthesize(const RootCoordsSU2& coords);

enum class ProductKind { DetA, DetA1, A0Squared };

/// Log of the closed-form products for det(A^*A), det(A_1^*A_1) and a_0^2.
double log_product_formula(const RootCoordsSU2& coords, ProductKind kind);

struct K2Observables {
  std::vector<cplx> x_series;  ///< X = a2^{-2} x, coefficients of z^0..z^band
  std::vector<cplx> ratio;     ///< c2/d2 at z_k = exp(2 pi i k / n_grid)
  int n_grid = 0;
  double a2 = 1.0;             ///< 1 / d2(0)
  cplx ratio_at_origin{};      ///< c2(0) / d2(0)
};

/// Entries (c2, d2) of k2, the triangular data k2 = [[1, x^*], [0, 1]] diag(a2, 1/a2) U and
/// the derived X and c2/d2. Throws NotInTopStratum when d2(0) = 0.
K2Observables k2_observables(std::span<const cplx> zeta, int band);

}  // namespace looplab
