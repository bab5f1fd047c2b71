#include <gtest/gtest.h>

#include <set>

#include "looplab/affine_weyl.hpp"
#include "looplab/errors.hpp"

using namespace looplab;

namespace {

// Value of q delta + alpha at a point in coroot coordinates, computed from the Cartan matrix.
Rational value(const RootSystem& rs, const AffineRoot& t, const RatVec& x) {
  Rational v(t.q);
  for (int j = 0; j < rs.rank; ++j)
    for (int i = 0; i < rs.rank; ++i) v += Rational(t.alpha[j] * rs.cartan[i][j]) * x[i];
  return v;
}

RatVec sample_point(int rank, int salt) {
  RatVec x;
  for (int i = 0; i < rank; ++i) x.push_back(Rational(3 * i + salt, 7 + 2 * i));
  return x;
}

}  // namespace

TEST(AffineWeyl, A1ReflectionOfPoint) {
  const RootSystem rs = build_root_system("A1");
  EXPECT_EQ(affine_weyl_apply(simple_reflection_map(rs, 0), {Rational(1, 4)}), (RatVec{Rational(3, 4)}));
  EXPECT_EQ(affine_weyl_apply(simple_reflection_map(rs, 1), {Rational(1, 4)}), (RatVec{Rational(-1, 4)}));
}

TEST(AffineWeyl, ReflectionsAreInvolutions) {
  for (const char* label : {"A2", "B2", "G2", "C3"}) {
    const RootSystem rs = build_root_system(label);
    for (int i = 0; i <= rs.rank; ++i) {
      const AffineMap r = simple_reflection_map(rs, i);
      EXPECT_TRUE(compose(r, r) == AffineMap::identity(rs.rank)) << label << " " << i;
      EXPECT_EQ(reflect(rs, i, simple_affine_root(rs, i)).q, -simple_affine_root(rs, i).q);
    }
  }
}

// (r_i tau)(x) = tau(r_i x): the root action is the transpose of the point action.
TEST(AffineWeyl, RootActionMatchesPointAction) {
  for (const char* label : {"A2", "B2", "G2", "F4"}) {
    const RootSystem rs = build_root_system(label);
    const RatVec x = sample_point(rs.rank, 1);
    for (int i = 0; i <= rs.rank; ++i)
      for (const IntVec& a : rs.positive_roots) {
        const AffineRoot tau{2, a};
        const RatVec rx = affine_weyl_apply(simple_reflection_map(rs, i), x);
        EXPECT_EQ(value(rs, reflect(rs, i, tau), x), value(rs, tau, rx)) << label;
        EXPECT_EQ(evaluate_root(rs, a, x), value(rs, AffineRoot{0, a}, x));
      }
  }
}

TEST(AffineWeyl, LongestElementWord) {
  for (const char* label : {"A1", "A3", "B2", "G2", "D4"}) {
    const RootSystem rs = build_root_system(label);
    const std::vector<int> w = longest_element_word(rs);
    EXPECT_EQ(w.size(), rs.positive_roots.size()) << label;
    // w0 sends every positive root to a negative one.
    for (const IntVec& a : rs.positive_roots) {
      const AffineRoot img = apply_word(rs, w, AffineRoot{0, a});
      EXPECT_FALSE(img.positive()) << label;
    }
  }
}

TEST(AffineWeyl, DefaultPeriodIsStrictlyDominant) {
  for (const char* label : {"A1", "A2", "B2", "C3", "G2", "F4", "E8"}) {
    const RootSystem rs = build_root_system(label);
    const IntVec p = default_period(rs);
    for (int j = 0; j < rs.rank; ++j) {
      int v = 0;
      for (int i = 0; i < rs.rank; ++i) v += p[i] * rs.cartan[i][j];
      EXPECT_GT(v, 0) << label;
    }
  }
  EXPECT_EQ(default_period(build_root_system("A1")), (IntVec{1}));
}

class SequenceTest : public ::testing::TestWithParam<const char*> {};

TEST_P(SequenceTest, ReducedPeriodicAndTauSet) {
  const RootSystem rs = build_root_system(GetParam());
  const int horizon = 3;
  const ReducedSequence seq = build_periodic_sequence(rs, default_period(rs), horizon);

  // Reduced: the tau_n are distinct positive affine roots.
  std::set<AffineRoot> seen;
  for (const AffineRoot& t : seq.taus) {
    EXPECT_TRUE(t.positive());
    EXPECT_TRUE(seen.insert(t).second) << to_string(t);
  }
  // Independent reducedness: the walk crosses exactly n walls after n steps.
  for (std::size_t n = 0; n < seq.maps.size(); n += 3) {
    const AffineMap& w = seq.maps[n];
    EXPECT_EQ(alcove_distance(rs, affine_weyl_apply(w, seq.basepoint)), static_cast<int>(n));
  }

  // Periodic: the word of one period is a translation, and letters repeat with that period.
  const int L = seq.period_length;
  ASSERT_GT(L, 0);
  std::vector<int> first(seq.indices.begin(), seq.indices.begin() + L);
  EXPECT_TRUE(word_map(rs, first).is_translation());
  for (std::size_t n = L; n < seq.indices.size(); ++n) EXPECT_EQ(seq.indices[n], seq.indices[n - L]);

  // Exactly the roots q delta - alpha, 1 <= q <= horizon, appear as zeta roots.
  const ExponentTable table = exponent_table(rs, seq, Rational(0), horizon);
  std::set<AffineRoot> zeta, expected;
  for (const auto& e : table.zeta) zeta.insert(e.root);
  for (int q = 1; q <= horizon; ++q)
    for (IntVec a : rs.positive_roots) {
      for (int& v : a) v = -v;
      expected.insert(AffineRoot{q, a});
    }
  EXPECT_EQ(zeta, expected);
  EXPECT_EQ(table.zeta.size(), expected.size());
  // And q delta + alpha, 0 <= q < horizon, as eta roots.
  std::set<AffineRoot> eta, expected_eta;
  for (const auto& e : table.eta) eta.insert(e.root);
  for (int q = 0; q < horizon; ++q)
    for (const IntVec& a : rs.positive_roots) expected_eta.insert(AffineRoot{q, a});
  EXPECT_EQ(eta, expected_eta);
  // Every exponent is integrable.
  for (const auto& e : table.zeta) EXPECT_GT(e.exponent, Rational(1)) << to_string(e.root);
  for (const auto& e : table.eta) EXPECT_GT(e.exponent, Rational(1)) << to_string(e.root);
}

INSTANTIATE_TEST_SUITE_P(Types, SequenceTest, ::testing::Values("A1", "A2", "B2", "G2", "C3"));

TEST(ExponentTable, A1MatchesSu2Exponents) {
  const RootSystem rs = build_root_system("A1");
  const int horizon = 100;
  const ReducedSequence seq = build_periodic_sequence(rs, default_period(rs), horizon);
  for (const Rational& l : {Rational(0), Rational(1), Rational(7, 2)}) {
    const ExponentTable t = exponent_table(rs, seq, l, horizon);
    ASSERT_EQ(t.zeta.size(), 100u);
    for (const auto& e : t.zeta) EXPECT_EQ(e.exponent, (l + Rational(2)) * Rational(e.index));
    for (const auto& e : t.eta) EXPECT_EQ(e.exponent, Rational(2) + (l + Rational(2)) * Rational(e.index));
    for (std::size_t j = 0; j < t.chi_rates.size(); ++j)
      EXPECT_EQ(t.chi_rates[j], (l + Rational(2)) * Rational(static_cast<long long>(j + 1)));
  }
}

TEST(ExponentTable, RejectsLevelAtMinusOne) {
  const RootSystem rs = build_root_system("A2");
  const ReducedSequence seq = build_periodic_sequence(rs, default_period(rs), 1);
  EXPECT_THROW(exponent_table(rs, seq, Rational(-1), 1), InvalidLevel);
}

TEST(ExponentTable, NonDominantPeriodRejected) {
  const RootSystem rs = build_root_system("A2");
  EXPECT_THROW(build_periodic_sequence(rs, {1, 0}, 1), InvalidInput);
}

TEST(ExponentTable, E8Horizon) {
  const RootSystem rs = build_root_system("E8");
  const ReducedSequence seq = build_periodic_sequence(rs, default_period(rs), 1);
  const ExponentTable t = exponent_table(rs, seq, Rational(0), 1);
  EXPECT_EQ(t.zeta.size(), 120u);
  EXPECT_EQ(t.dual_coxeter, 30);
}
