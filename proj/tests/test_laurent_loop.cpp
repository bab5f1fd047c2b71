#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "looplab/errors.hpp"
#include "looplab/laurent_loop.hpp"
#include "looplab/loop_io.hpp"

using namespace looplab;

namespace {

LaurentLoop random_loop(int lo, int hi, unsigned seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> n(0.0, 1.0);
  LaurentLoop g(2, lo, hi);
  for (int k = lo; k <= hi; ++k)
    for (int r = 0; r < 2; ++r)
      for (int c = 0; c < 2; ++c) g.coeff_ref(k)(r, c) = {n(rng), n(rng)};
  return g;
}

cplx grid_z(int k, int n) { return std::polar(1.0, 2.0 * std::numbers::pi * k / n); }

// Direct evaluation sum c_n z^n, independent of the library's evaluators.
Matrix direct(const LaurentLoop& g, cplx z) {
  Matrix v = Matrix::Zero(g.dim(), g.dim());
  for (int n = g.n_min(); n <= g.n_max(); ++n) v += g.coeff(n) * std::pow(z, n);
  return v;
}

LaurentLoop diag_z() {
  const int p[2] = {1, -1};
  return LaurentLoop::diagonal_monomial(p);
}

}  // namespace

TEST(LaurentLoop, MultiplyMatchesPointwiseProduct) {
  const LaurentLoop g = random_loop(-2, 2, 1), h = random_loop(-2, 2, 2);
  const LaurentLoop gh = multiply(g, h);
  EXPECT_EQ(gh.n_min(), -4);
  EXPECT_EQ(gh.n_max(), 4);
  for (int k = 0; k < 64; ++k) {
    const cplx z = grid_z(k, 64);
    EXPECT_LT((direct(gh, z) - direct(g, z) * direct(h, z)).norm(), 1e-12);
  }
}

TEST(LaurentLoop, MonomialInverse) {
  const int p[2] = {-1, 1};
  const LaurentLoop prod = multiply(diag_z(), LaurentLoop::diagonal_monomial(p));
  EXPECT_TRUE(prod.trimmed() == LaurentLoop::identity(2));
}

TEST(LaurentLoop, StarIsPointwiseAdjoint) {
  const LaurentLoop g = random_loop(-1, 3, 3);
  const LaurentLoop s = star(g);
  for (int k = 0; k < 32; ++k) {
    const cplx z = grid_z(k, 32);
    EXPECT_LT((direct(s, z) - direct(g, z).adjoint()).norm(), 1e-12);
  }
  const int q[2] = {-1, 1};
  EXPECT_TRUE(star(diag_z()) == LaurentLoop::diagonal_monomial(q));
}

TEST(LaurentLoop, EvaluateSmallGrid) {
  const auto v = evaluate(diag_z(), 4);
  EXPECT_LT(std::abs(v[1](0, 0) - cplx(0, 1)), 1e-15);
  EXPECT_LT(std::abs(v[1](1, 1) - cplx(0, -1)), 1e-15);
  for (const Matrix& m : evaluate(LaurentLoop::identity(2), 7)) EXPECT_LT((m - Matrix::Identity(2, 2)).norm(), 1e-15);
  EXPECT_THROW(evaluate(diag_z(), 0), InvalidInput);
}

TEST(LaurentLoop, EvaluateMatchesDirectSum) {
  const LaurentLoop g = random_loop(-5, 3, 4);
  const auto v = evaluate(g, 13);
  for (int k = 0; k < 13; ++k) EXPECT_LT((v[static_cast<std::size_t>(k)] - direct(g, grid_z(k, 13))).norm(), 1e-12);
  // Grid smaller than the band folds modes; still exact on the grid.
  const auto w = evaluate(g, 5);
  for (int k = 0; k < 5; ++k) EXPECT_LT((w[static_cast<std::size_t>(k)] - direct(g, grid_z(k, 5))).norm(), 1e-12);
}

TEST(LaurentLoop, ProjectInvertsEvaluate) {
  const LaurentLoop g = random_loop(-4, 6, 5);
  const auto v = evaluate(g, 11);
  const LaurentLoop back = fourier_project(v, -4, 6);
  for (int n = -4; n <= 6; ++n) EXPECT_LT((back.coeff(n) - g.coeff(n)).norm(), 1e-12);
  EXPECT_THROW(fourier_project(v, -5, 6), InvalidInput);
}

TEST(LaurentLoop, UnitarityDefect) {
  EXPECT_LT(unitarity_defect(diag_z()), 1e-14);
  EXPECT_GT(unitarity_defect(random_loop(-1, 1, 6)), 0.1);
}

TEST(Mobius, RotationActsOnModes) {
  const LaurentLoop g = random_loop(-3, 3, 7);
  const double phi = 0.8;
  const LaurentLoop r = mobius_reparam(g, Mobius::rotation(phi), 3);
  for (int n = -3; n <= 3; ++n) EXPECT_LT((r.coeff(n) - std::polar(1.0, -n * phi) * g.coeff(n)).norm(), 1e-12);
}

TEST(Mobius, HyperbolicMatchesPointwisePrecomposition) {
  const Mobius s = Mobius::hyperbolic(0.2);
  const LaurentLoop r = mobius_reparam(diag_z(), s, 4 * 16);
  for (int k = 0; k < 50; ++k) {
    const cplx z = std::polar(1.0, 2.0 * std::numbers::pi * (k + 0.3) / 50);
    EXPECT_LT((direct(r, z) - direct(diag_z(), s.apply_inverse(z))).norm(), 1e-8);
  }
  EXPECT_LT(unitarity_defect(r), 1e-8);
  EXPECT_LT(std::abs(s.apply(s.apply_inverse(cplx(0.6, 0.8))) - cplx(0.6, 0.8)), 1e-14);
}

TEST(LoopIo, JsonRoundTrip) {
  const LaurentLoop g = random_loop(-2, 1, 8);
  EXPECT_TRUE(parse_loop(dump_loop(g)) == g);
  EXPECT_THROW(parse_loop("{\"dim\": 2}"), InvalidInput);
}
