#pragma once

#include <string>
#include <vector>

#include "looplab/rational.hpp"
#include "looplab/root_system.hpp"

namespace looplab {

using RatVec = std::vector<Rational>;

/// Real affine root q delta + alpha (alpha a finite root in the simple-root basis) or the
/// imaginary root q delta (alpha = 0). As an affine function on the level-one slice it is
/// x -> q + alpha(x); the simple affine roots are alpha_0 = delta - theta and alpha_1..alpha_r.
struct AffineRoot {
  int q = 0;
  IntVec alpha;

  bool imaginary() const;
  bool positive() const;
  bool operator==(const AffineRoot&) const = default;
  auto operator<=>(const AffineRoot&) const = default;
};

std::string to_string(const AffineRoot& tau);

/// Simple affine root alpha_i, i in 0..r.
AffineRoot simple_affine_root(const RootSystem& rs, int i);
/// r_i acting on affine roots: tau - <tau, h_i> alpha_i with h_0 = c - h_theta.
AffineRoot reflect(const RootSystem& rs, int i, const AffineRoot& tau);
/// r_{word[0]} r_{word[1]} ... applied to tau (rightmost letter first).
AffineRoot apply_word(const RootSystem& rs, const std::vector<int>& word, const AffineRoot& tau);

/// x -> w x + t on coroot coordinates of the level-one slice d + h_R.
struct AffineMap {
  IntMat w;
  IntVec t;

  static AffineMap identity(int rank);
  RatVec apply(const RatVec& x) const;
  bool is_translation() const;
  bool operator==(const AffineMap&) const = default;
};

/// (a o b)(x) = a(b(x)).
AffineMap compose(const AffineMap& a, const AffineMap& b);
/// r_i on points: x - alpha_i(x) h_i for i >= 1, x - (theta(x) - 1) h_theta for i = 0.
AffineMap simple_reflection_map(const RootSystem& rs, int i);
/// r_{word[0]} o r_{word[1]} o ...
AffineMap word_map(const RootSystem& rs, const std::vector<int>& word);
RatVec affine_weyl_apply(const AffineMap& w, const RatVec& x);

/// alpha(x) for x in coroot coordinates.
Rational evaluate_root(const RootSystem& rs, const IntVec& alpha, const RatVec& x);
/// Coroot h_beta in the simple-coroot basis.
IntVec coroot_of(const RootSystem& rs, const IntVec& beta);
/// Number of affine hyperplanes separating the fundamental alcove from the alcove containing y
/// (y must not lie on a wall).
int alcove_distance(const RootSystem& rs, const RatVec& y);
/// Smallest strictly dominant coroot-lattice point among rho-check and 2 rho-check.
IntVec default_period(const RootSystem& rs);

/// gamma_1, gamma_2, ... with w_n = r_{gamma_n} o ... o r_{gamma_1}, tau_n = w_{n-1}^{-1} gamma_n.
struct ReducedSequence {
  std::vector<int> indices;        ///< gamma_n in 0..r, n = 1..size
  std::vector<AffineMap> maps;     ///< maps[n] = w_n, maps[0] = identity
  std::vector<AffineRoot> taus;    ///< taus[n - 1] = tau_n
  IntVec period;                   ///< lambda in coroot coordinates
  int period_length = 0;
  RatVec basepoint;                ///< generic interior point of the fundamental alcove
};

/// Alcove walk along basepoint + t lambda for t in (0, horizon + 1]. Throws InvalidInput when
/// lambda is not strictly dominant and NonReducedSequence if a self-check fails.
ReducedSequence build_periodic_sequence(const RootSystem& rs, const IntVec& period, int horizon);

/// tau_n with q <= horizon, in sequence order. Throws NonReducedSequence on a negative tau.
std::vector<AffineRoot> tau_sequence(const ReducedSequence& seq, int horizon);

/// Lexicographically smallest reduced word for the longest element of the finite Weyl group
/// (1-based simple indices).
std::vector<int> longest_element_word(const RootSystem& rs);

struct ExponentEntry {
  int index = 0;  ///< position in the eta (from 0) or zeta (from 1) sequence
  AffineRoot root;
  Rational exponent;
};

struct ExponentTable {
  Rational level;
  int dual_coxeter = 0;
  int horizon = 0;
  std::vector<ExponentEntry> eta;   ///< roots q delta + alpha, q = 0..horizon-1
  std::vector<ExponentEntry> zeta;  ///< roots q delta - alpha, q = 1..horizon
  std::vector<Rational> chi_rates;  ///< (l + g) j, j = 1..horizon
  std::vector<int> w0_word;
};

/// Exponents 1 + (l + g) q(h_tau) -/+ rho(h_alpha), where q(h_tau) = 2 q / (alpha, alpha) is the
/// central coefficient of the coroot (q itself for long roots). Throws InvalidLevel for l <= -1.
ExponentTable exponent_table(const RootSystem& rs, const ReducedSequence& seq, const Rational& level, int horizon);

}  // namespace looplab
