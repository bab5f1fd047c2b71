#pragma once

#include <string>
#include <vector>

#include "looplab/affine_weyl.hpp"
#include "looplab/random.hpp"
#include "looplab/rational.hpp"
#include "looplab/root_coords.hpp"

namespace looplab {

enum class CoordKind { Eta, Chi, Zeta };

/// Product measure on truncated root subgroup coordinates: eta/zeta factors
/// ((p - 1)/pi)(1 + |w|^2)^{-p}, chi factors (r/pi)^d exp(-r |chi|^2) in an orthonormal basis of
/// the (complexified) Cartan subalgebra of dimension d, and Haar measure on the torus for chi_0.
struct MeasureSpec {
  enum class Source { Su2, General };

  Source source = Source::Su2;
  std::string label = "A1";
  Rational level;
  int truncation = 0;
  std::vector<Rational> eta_exponents;   ///< eta_exponents[i], i = 0..
  std::vector<Rational> chi_rates;       ///< chi_rates[j - 1]
  std::vector<Rational> zeta_exponents;  ///< zeta_exponents[k - 1]
  int cartan_dim = 1;
  /// Gram matrix of the simple coroots under the normalized form (general source only).
  std::vector<std::vector<double>> coroot_gram;

  double eta_exponent(int i) const;
  double chi_rate(int j) const;
  double zeta_exponent(int k) const;
};

/// p_eta(i) = 2 + (l + 2) i, r(j) = 2 j (l + 2), p_zeta(k) = (l + 2) k for i < T, j, k <= T.
MeasureSpec su2_measure(const Rational& level, int truncation);

/// Exponents read off an exponent table; chi_j is a Cartan vector with rate (l + g) j.
/// Truncation is the table horizon.
MeasureSpec general_measure(const RootSystem& rs, const ExponentTable& table);

/// Coordinates of a general-K sample: chi[j - 1] holds coroot coordinates of chi_j and chi0
/// holds theta in chi_0 = i sum_k theta_k h_k.
struct GeneralCoords {
  std::vector<cplx> eta;
  std::vector<std::vector<cplx>> chi;
  std::vector<double> chi0;
  std::vector<cplx> zeta;
};

/// |w|^2 = (1 - U)^{-1/(p-1)} - 1 with a uniform phase.
cplx sample_power_law(double p, Rng& rng);

/// Exact independent draw. Throws InvalidLevel if the level is <= -1 and InvalidInput when
/// the spec is not su2-shaped.
RootCoordsSU2 sample_coords(const MeasureSpec& spec, Rng& rng);
GeneralCoords sample_general_coords(const MeasureSpec& spec, Rng& rng);

/// Log density of the truncated product measure (chi_0 excluded; its Haar factor is a
/// probability density with respect to normalized Haar measure).
double log_density(const MeasureSpec& spec, const RootCoordsSU2& coords);
double log_density(const MeasureSpec& spec, const GeneralCoords& coords);

/// Squared Hellinger distance between one product factor and the matching factor of the
/// Gaussian background (p/pi) exp(-p |w|^2) with the same exponent. Chi factors coincide.
double hellinger_vs_gaussian(const MeasureSpec& spec, int index, CoordKind kind);
/// Same for a bare exponent p > 1.
double hellinger_power_law(double p);

}  // namespace looplab
