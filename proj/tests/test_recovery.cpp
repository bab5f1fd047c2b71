#include <gtest/gtest.h>

#include <cmath>

#include "looplab/ensemble.hpp"
#include "looplab/errors.hpp"
#include "looplab/recovery.hpp"

using namespace looplab;

TEST(Recovery, SchurPeelOfSingleFactorRatio) {
  // A constant ratio r(z) = c is a single step with coordinate -conj(c), remainder zero.
  std::vector<cplx> r = {{0.3, -0.1}, {0.0, 0.0}, {0.0, 0.0}};
  const auto c = schur_peel(r, 0, 1);
  ASSERT_EQ(c.size(), 1u);
  EXPECT_LT(std::abs(c[0] - cplx(-0.3, -0.1)), 1e-14);
  for (const cplx& v : r) EXPECT_LT(std::abs(v), 1e-14);
}

TEST(Recovery, RoundTripMixedCoordinates) {
  RootCoordsSU2 c = RootCoordsSU2::zero(3, 1.0);
  c.eta = {{0.2, 0.1}, {-0.1, 0.3}, {0.05, 0.0}};
  c.chi = {{0.1, -0.05}, {0.0, 0.02}, {0.0, 0.0}};
  c.zeta = {{0.3, 0.0}, {0.0, -0.2}, {0.1, 0.1}};
  c.chi0 = {0.0, -2.5};
  const RoundtripCheck r = roundtrip_check(c, 64);
  EXPECT_LT(r.max_coord_error, 1e-8);
  EXPECT_LT(r.birkhoff_residual, 1e-8);
  EXPECT_NEAR(r.a0_triangular, r.a0_dets, 1e-6);
  EXPECT_NEAR(r.a0_triangular * r.a0_triangular, std::exp(log_product_formula(c, ProductKind::A0Squared)), 1e-8);
}

TEST(Recovery, RoundTripRandomEnsemble) {
  for (std::uint64_t s = 0; s < 6; ++s) {
    Rng rng = make_rng(99, s);
    const RootCoordsSU2 c = random_test_coords(rng, 0.0);
    const RoundtripCheck r = roundtrip_check(c, 64);
    EXPECT_LT(r.max_coord_error, 1e-8) << "sample " << s;
  }
}

TEST(Recovery, LeadingCoordinates) {
  RootCoordsSU2 c = RootCoordsSU2::zero(2);
  c.eta = {{0.4, -0.2}, {0.1, 0.0}};
  c.zeta = {{-0.3, 0.2}, {0.0, 0.1}};
  c.chi = {{0.05, 0.0}, {0.0, 0.0}};
  const LeadingCoords lc = leading_coords(synthesize(c), 64);
  EXPECT_LT(std::abs(lc.eta0 - c.eta[0]), 1e-9);
  EXPECT_LT(std::abs(lc.zeta1 - c.zeta[0]), 1e-9);
}

TEST(Recovery, WindingLoopIsRejected) {
  const int p[2] = {1, -1};
  EXPECT_THROW(recover_coords(LaurentLoop::diagonal_monomial(p), 0.0, 1e-7, 2), Error);
}
