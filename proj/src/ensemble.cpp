#include "looplab/ensemble.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>

#include "looplab/birkhoff.hpp"
#include "looplab/errors.hpp"
#include "looplab/recovery.hpp"
#include "looplab/toeplitz.hpp"

namespace looplab {

RootCoordsSU2 random_test_coords(Rng& rng, double level, const EnsembleOptions& opt) {
  if (opt.max_index < 1 || opt.support < 0 || !(opt.max_modulus > 0.0)) throw InvalidInput("bad ensemble options");
  const int t = opt.max_index;
  RootCoordsSU2 c = RootCoordsSU2::zero(t, level);
  std::uniform_real_distribution<double> unif(0.0, 1.0);
  const int slots = 3 * t;
  std::vector<int> order(static_cast<std::size_t>(slots));
  std::iota(order.begin(), order.end(), 0);
  std::shuffle(order.begin(), order.end(), rng);
  const int support = std::min(opt.support, slots);
  const int count = 1 + static_cast<int>(unif(rng) * support) % std::max(1, support);
  for (int s = 0; s < count; ++s) {
    const double r = opt.max_modulus * (1.0 - unif(rng));
    const cplx v = std::polar(r, 2.0 * std::numbers::pi * unif(rng));
    const int slot = order[static_cast<std::size_t>(s)];
    const auto idx = static_cast<std::size_t>(slot % t);
    if (slot < t) c.eta[idx] = v;
    else if (slot < 2 * t) c.chi[idx] = v;
    else c.zeta[idx] = v;
  }
  c.chi0 = {0.0, std::remainder(2.0 * std::numbers::pi * unif(rng), 2.0 * std::numbers::pi)};
  return c;
}

IdentityCheck identity_check(const RootCoordsSU2& coords, int cutoff) {
  const LaurentLoop g = synthesize(coords);
  const LogDet plain = log_det_AstarA(toeplitz(g, cutoff, false));
  const LogDet shifted = log_det_AstarA(toeplitz(g, cutoff, true));
  if (plain.singular || shifted.singular) throw ConvergenceFailure("identity_check: singular Toeplitz section");
  const TriangularFactors tf = triangular_factor(g, cutoff, 1e-8);
  IdentityCheck out;
  out.numeric = {plain.value, shifted.value, 2.0 * std::log(tf.a0)};
  out.closed_form = {log_product_formula(coords, ProductKind::DetA), log_product_formula(coords, ProductKind::DetA1),
                     log_product_formula(coords, ProductKind::A0Squared)};
  for (std::size_t q = 0; q < 3; ++q) out.rel_error[q] = std::abs(std::expm1(out.numeric[q] - out.closed_form[q]));
  return out;
}

RoundtripCheck roundtrip_check(const RootCoordsSU2& coords, int cutoff, double tol) {
  const LaurentLoop g = synthesize(coords);
  RecoveryOptions opt;
  opt.truncation = coords.truncation();
  opt.cutoff = cutoff;
  opt.tol = tol;
  const RecoveryReport rep = recover_coords_report(g, coords.level, opt);
  RoundtripCheck out;
  out.resynthesis_residual = rep.residual;
  out.refined = rep.refined;
  for (int i = 0; i < opt.truncation; ++i) {
    out.max_coord_error = std::max({out.max_coord_error, std::abs(rep.coords.eta_at(i) - coords.eta_at(i)),
                                    std::abs(rep.coords.chi_at(i + 1) - coords.chi_at(i + 1)),
                                    std::abs(rep.coords.zeta_at(i + 1) - coords.zeta_at(i + 1))});
  }
  const double dphase = std::remainder(rep.coords.chi0.imag() - coords.chi0.imag(), 2.0 * std::numbers::pi);
  out.max_coord_error = std::max(out.max_coord_error, std::abs(dphase));
  const TriangularFactors tf = triangular_factor(g, std::max(cutoff, g.band_width()), 1e-8);
  out.birkhoff_residual = tf.residual;
  out.a0_triangular = tf.a0;
  out.a0_dets = a0_from_dets(g, std::max(cutoff, g.band_width()));
  return out;
}

}  // namespace looplab
