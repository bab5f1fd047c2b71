#pragma once

#include <string>
#include <vector>

#include "looplab/rational.hpp"

namespace looplab {

using IntVec = std::vector<int>;
using IntMat = std::vector<IntVec>;

/// Finite reduced root system with simple roots alpha_1..alpha_r (stored 0-based).
///
/// Conventions: cartan[i][j] = alpha_j(h_i) = 2 (alpha_i, alpha_j) / (alpha_i, alpha_i); roots are
/// integer vectors in the simple-root basis; the form is normalized so (theta, theta) = 2.
struct RootSystem {
  std::string label;  ///< e.g. "A2", "G2"
  char type = 'A';
  int rank = 0;
  IntMat cartan;
  std::vector<std::vector<Rational>> form;  ///< (alpha_i, alpha_j)
  std::vector<IntVec> positive_roots;       ///< sorted by height, then lexicographically
  IntVec highest_root;
  IntVec comarks;  ///< h_theta = sum_j comarks[j] h_j
  int dual_coxeter = 0;

  /// beta(h_i) for beta in the simple-root basis.
  int pair_coroot(const IntVec& beta, int i) const;
  /// beta(h_theta).
  int pair_theta_coroot(const IntVec& beta) const;
  Rational inner(const IntVec& a, const IntVec& b) const;
  /// rho(h_beta) = 2 (rho, beta) / (beta, beta); rho(h_j) = 1 for simple coroots.
  Rational rho_pairing(const IntVec& beta) const;
  /// rho in the fundamental-weight basis (all ones).
  std::vector<Rational> rho() const;
  bool is_root(const IntVec& beta) const;
  int height(const IntVec& beta) const;
};

/// Types A_r, B_r (r >= 2), C_r (r >= 2), D_r (r >= 3), E6, E7, E8, F4, G2. Throws InvalidInput.
RootSystem build_root_system(char type, int rank);
/// Label form, e.g. "A1", "G2", "E8".
RootSystem build_root_system(const std::string& label);

}  // namespace looplab
