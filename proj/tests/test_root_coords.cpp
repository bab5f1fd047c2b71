#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "looplab/errors.hpp"
#include "looplab/root_coords.hpp"

using namespace looplab;

namespace {

Matrix det_check(const Matrix& m) { return Matrix::Constant(1, 1, m.determinant()); }

}  // namespace

TEST(RootCoords, FactorsAreUnitary) {
  const cplx e[2] = {{0.2, 0.0}, {0.1, 0.0}};
  EXPECT_LT(unitarity_defect(k1_synthesize(e, 1), 64), 1e-12);
  const cplx z[2] = {{0.3, 0.0}, {0.1, 0.0}};
  const LaurentLoop k2 = k2_synthesize(z, 2);
  for (const Matrix& v : evaluate(k2, 64)) EXPECT_LT(std::abs(v.determinant() - 1.0), 1e-12);
  EXPECT_LT(unitarity_defect(k2, 64), 1e-12);
}

TEST(RootCoords, TorusConstant) {
  const TorusLoop t = torus_loop({0.0, std::numbers::pi / 2}, {}, 0);
  EXPECT_LT(std::abs(t.loop.coeff(0)(0, 0) - cplx(0, 1)), 1e-15);
  EXPECT_LT(std::abs(t.loop.coeff(0)(1, 1) - cplx(0, -1)), 1e-15);
  EXPECT_THROW(torus_loop({0.1, 0.0}, {}, 0), InvalidInput);
}

TEST(RootCoords, TorusMatchesExponential) {
  const cplx chi[1] = {{0.1, 0.0}};
  const TorusLoop t = torus_loop({}, chi, torus_band_for(chi));
  EXPECT_LT(t.aliasing_error, 1e-12);
  for (int k = 0; k < 37; ++k) {
    const double th = 2.0 * std::numbers::pi * (k + 0.25) / 37;
    const cplx x = 0.1 * std::polar(1.0, th) - 0.1 * std::polar(1.0, -th);
    const Matrix v = t.loop.at(std::polar(1.0, th));
    EXPECT_LT(std::abs(v(0, 0) - std::exp(x)), 1e-12);
    EXPECT_LT(std::abs(v(1, 1) - std::exp(-x)), 1e-12);
  }
}

TEST(RootCoords, SynthesizedLoopIsSpecialUnitary) {
  RootCoordsSU2 c = RootCoordsSU2::zero(3, 1.0);
  c.eta = {{0.1, 0.2}, {0.0, 0.0}, {-0.3, 0.1}};
  c.chi = {{0.05, 0.05}, {0.0, 0.0}, {0.0, -0.1}};
  c.zeta = {{0.0, 0.0}, {0.2, 0.2}, {0.0, 0.0}};
  c.chi0 = {0.0, 1.0};
  const LaurentLoop g = synthesize(c);
  EXPECT_LT(unitarity_defect(g), 1e-9);
  for (const Matrix& v : evaluate(g, 64)) EXPECT_LT(std::abs(det_check(v)(0, 0) - 1.0), 1e-9);
}

TEST(RootCoords, ValidateRejectsBadInput) {
  RootCoordsSU2 c = RootCoordsSU2::zero(2);
  c.chi0 = {0.5, 0.0};
  EXPECT_THROW(c.validate(), InvalidInput);
  RootCoordsSU2 d = RootCoordsSU2::zero(2, -1.0);
  EXPECT_THROW(d.validate(), InvalidLevel);
}

TEST(RootCoords, ProductFormulaSingleEta) {
  const cplx c{0.3, 0.4};
  RootCoordsSU2 x = RootCoordsSU2::zero(2);
  x.eta[0] = c;
  const double l = std::log1p(std::norm(c));
  EXPECT_NEAR(log_product_formula(x, ProductKind::DetA), 0.0, 1e-15);
  EXPECT_NEAR(log_product_formula(x, ProductKind::DetA1), -l, 1e-15);
  EXPECT_NEAR(log_product_formula(x, ProductKind::A0Squared), -l, 1e-15);
}

TEST(RootCoords, ProductFormulaSingleZeta) {
  const cplx c{-0.2, 0.1};
  RootCoordsSU2 x = RootCoordsSU2::zero(2);
  x.zeta[0] = c;
  const double l = std::log1p(std::norm(c));
  EXPECT_NEAR(log_product_formula(x, ProductKind::A0Squared), l, 1e-15);
}

TEST(RootCoords, K2RatioVanishesAtOrigin) {
  const cplx z[3] = {{0.2, 0.1}, {0.0, 0.0}, {-0.1, 0.3}};
  const K2Observables o = k2_observables(z, 8);
  EXPECT_LT(std::abs(o.ratio_at_origin), 1e-14);
  EXPECT_GT(o.a2, 0.0);
  for (const cplx& r : o.ratio) EXPECT_TRUE(std::isfinite(std::abs(r)));
}
