#include <gtest/gtest.h>

#include <cmath>

#include "looplab/ks.hpp"
#include "looplab/random.hpp"

using namespace looplab;

TEST(Ks, KolmogorovTailReferenceValues) {
  // Q(lambda) = 2 sum (-1)^{k-1} exp(-2 k^2 lambda^2); tabulated critical values.
  EXPECT_NEAR(kolmogorov_tail(1.3581), 0.05, 1e-4);
  EXPECT_NEAR(kolmogorov_tail(1.6276), 0.01, 1e-4);
  EXPECT_NEAR(kolmogorov_tail(0.0), 1.0, 1e-12);
  EXPECT_NEAR(kolmogorov_tail(5.0), 0.0, 1e-12);
}

TEST(Ks, OneSampleStatisticOnGrid) {
  // Midpoints of n cells against Uniform[0,1]: D = 1/(2n) exactly.
  std::vector<double> x;
  for (int k = 0; k < 10; ++k) x.push_back((k + 0.5) / 10);
  const KsResult r = ks_one_sample(x, [](double u) { return u; });
  EXPECT_NEAR(r.statistic, 0.05, 1e-15);
  EXPECT_EQ(r.n, 10u);
  EXPECT_GT(r.p_value, 0.99);
}

TEST(Ks, TwoSampleIdenticalAndShifted) {
  Rng rng = make_rng(3, 0);
  std::normal_distribution<double> n(0.0, 1.0);
  std::vector<double> a, b;
  for (int k = 0; k < 2000; ++k) a.push_back(n(rng));
  const KsResult same = ks_two_sample(a, a);
  EXPECT_EQ(same.statistic, 0.0);
  EXPECT_EQ(same.p_value, 1.0);
  for (double v : a) b.push_back(v + 0.3);
  EXPECT_LT(ks_two_sample(a, b).p_value, 1e-6);
}

TEST(Ks, TwoSampleHandlesTies) {
  const std::vector<double> a = {1, 1, 2, 2}, b = {1, 2, 2, 2};
  EXPECT_NEAR(ks_two_sample(a, b).statistic, 0.25, 1e-15);
}

TEST(Ks, NullCalibration) {
  // Under the null, p < 0.01 should occur in roughly 1% of repetitions.
  int rejections = 0;
  for (std::uint64_t rep = 0; rep < 400; ++rep) {
    Rng rng = make_rng(17, rep);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    std::vector<double> x(200);
    for (double& v : x) v = u(rng);
    if (ks_one_sample(x, [](double t) { return t; }).p_value < 0.01) ++rejections;
  }
  EXPECT_LE(rejections, 12);
}
