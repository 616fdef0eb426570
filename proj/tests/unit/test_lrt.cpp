#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "hominf/geometry.hpp"
#include "hominf/homology.hpp"
#include "hominf/lrt.hpp"
#include "hominf/occupancy.hpp"
#include "oracles.hpp"

namespace {

namespace oracle = hominf::testing;
using hominf::build_pack;
using hominf::Hypothesis;

/// Sample with every point placed at c_i + tau e_1 for the listed spheres.
hominf::SampleSet points_on(const hominf::SpherePack& pack, const std::vector<std::size_t>& which) {
  hominf::SampleSet s;
  s.points = hominf::PointCloud(pack.ambient_dim());
  for (const auto i : which) {
    auto p = s.points.emplace_zero();
    std::copy(pack.center(i).begin(), pack.center(i).end(), p.begin());
    p[0] += pack.radius();
  }
  return s;
}

/// Exact L = (k/m)(m/(m-1))^n as a rational.
oracle::Rational rational_ratio(std::size_t m, std::size_t n, std::size_t k) {
  oracle::Rational r{oracle::BigInt(k), oracle::BigInt(m)};
  for (std::size_t i = 0; i < n; ++i) r *= oracle::Rational(oracle::BigInt(m), oracle::BigInt(m - 1));
  return r;
}

TEST(LikelihoodRatio, AllOccupiedNeverRejects) {
  const auto pack = build_pack(1, 2, 1.0 / 16.0);
  const auto r = hominf::likelihood_ratio(pack, points_on(pack, {0, 1, 2, 3, 3}));
  EXPECT_EQ(r.empty_count, 0u);
  EXPECT_EQ(r.ratio, 0.0);
  EXPECT_EQ(r.decision, 0);
  EXPECT_TRUE(std::isinf(r.log_l1));
}

TEST(LikelihoodRatio, TieAtOnePointAccepts) {
  const auto pack = build_pack(1, 2, 1.0 / 8.0);
  ASSERT_EQ(pack.count(), 2u);
  const auto r = hominf::likelihood_ratio(pack, points_on(pack, {1}));
  EXPECT_EQ(r.empty_count, 1u);
  EXPECT_EQ(r.ratio, 1.0);
  EXPECT_EQ(r.decision, 0);
}

TEST(LikelihoodRatio, TwoPointsOnOneSphereReject) {
  const auto pack = build_pack(1, 2, 1.0 / 8.0);
  const auto r = hominf::likelihood_ratio(pack, points_on(pack, {0, 0}));
  EXPECT_NEAR(r.ratio, 2.0, 1e-12);
  EXPECT_EQ(r.decision, 1);
  const auto three = hominf::likelihood_ratio(pack, points_on(pack, {1, 1, 1}));
  EXPECT_NEAR(three.ratio, hominf::likelihood_ratio_closed_form(2, 3, 1), 1e-12);
  EXPECT_NEAR(three.ratio, 4.0, 1e-12);
}

TEST(LikelihoodRatio, DensitiesUseSphereArea) {
  const auto pack = build_pack(2, 3, 1.0 / 8.0);
  const auto r = hominf::likelihood_ratio(pack, points_on(pack, {0, 1}));
  EXPECT_NEAR(r.log_l0, -2.0 * std::log(pack.total_volume()), 1e-12);
}

TEST(LikelihoodRatio, MatchesClosedFormOnRandomCases) {
  std::mt19937_64 rng(77);
  for (int c = 0; c < 500; ++c) {
    const int d = 1 + static_cast<int>(rng() % 2);
    const double tau = 1.0 / (8.0 + static_cast<double>(rng() % 20));
    const auto pack = build_pack(d, d + 1 + static_cast<int>(rng() % 2), tau);
    if (pack.count() < 2) continue;
    const auto n = static_cast<std::size_t>(rng() % 201);
    const Hypothesis hyp = (rng() % 2 == 0) ? Hypothesis::null() : Hypothesis::mixture();
    const auto s = hominf::sample(pack, hyp, n, rng());
    const auto r = hominf::likelihood_ratio(pack, s);
    const double closed = hominf::likelihood_ratio_closed_form(pack.count(), n, r.empty_count);
    if (closed == 0.0) {
      EXPECT_EQ(r.ratio, 0.0);
    } else {
      EXPECT_NEAR(r.ratio / closed, 1.0, 1e-9) << "case " << c;
    }
    EXPECT_EQ(r.decision, r.ratio > 1.0 ? 1 : 0);
  }
}

TEST(ClosedForm, Values) {
  EXPECT_EQ(hominf::likelihood_ratio_closed_form(5, 10, 0), 0.0);
  EXPECT_NEAR(hominf::likelihood_ratio_closed_form(2, 3, 1), 4.0, 1e-12);
  EXPECT_NEAR(hominf::t_mn(2, 1), 1.0, 1e-15);
  EXPECT_NEAR(hominf::t_mn(2, 5), 16.0, 1e-12);
  for (std::size_t n = 0; n < 30; ++n) {
    EXPECT_NEAR(hominf::t_mn(2, n) / std::ldexp(1.0, static_cast<int>(n) - 1), 1.0, 1e-12);
  }
  EXPECT_DOUBLE_EQ(hominf::t_mn(7, 13), hominf::likelihood_ratio_closed_form(7, 13, 1));
  EXPECT_THROW((void)hominf::likelihood_ratio_closed_form(1, 3, 1), std::invalid_argument);
  EXPECT_THROW((void)hominf::likelihood_ratio_closed_form(3, 3, 4), std::invalid_argument);
}

TEST(ClosedForm, TmnApproachesInverseDelta) {
  const std::size_t n = hominf::threshold_sample_size(10000, 0.5);
  EXPECT_LE(std::abs(hominf::t_mn(10000, n) * 0.5 - 1.0), 0.01);
}

TEST(RatioSign, ExactOnEveryTie) {
  for (std::size_t m = 2; m <= 12; ++m) {
    for (std::size_t n = 0; n <= 14; ++n) {
      for (std::size_t k = 0; k <= m; ++k) {
        const auto cmp = rational_ratio(m, n, k).compare(oracle::Rational(1));
        const int expected = cmp > 0 ? 1 : (cmp == 0 ? 0 : -1);
        ASSERT_EQ(hominf::likelihood_ratio_sign(m, n, k), expected)
            << "m=" << m << " n=" << n << " k=" << k;
      }
    }
  }
}

TEST(ExactRisk, TwoSpheresThreePoints) {
  const auto r = hominf::exact_lrt_risk(2, 3);
  EXPECT_EQ(r.k_threshold, 0.25);
  EXPECT_EQ(r.type_one, 0.25);
  EXPECT_EQ(r.type_two, 0.0);
  EXPECT_EQ(r.total, 0.25);
}

TEST(ExactRisk, TwoSpheresOnePointNeverRejects) {
  const auto r = hominf::exact_lrt_risk(2, 1);
  EXPECT_EQ(r.k_threshold, 1.0);
  EXPECT_EQ(r.type_one, 0.0);
  EXPECT_EQ(r.type_two, 1.0);
  EXPECT_EQ(r.total, 1.0);
  EXPECT_EQ(hominf::lrt_rejection_start(2, 1), 2u);
  EXPECT_EQ(hominf::lrt_rejection_start(3, 0), 4u);
}

TEST(ExactRisk, SixtyFourSpheresAtThreshold) {
  const auto r = hominf::exact_lrt_risk(64, 311);
  EXPECT_NEAR(r.type_one, 1.0 - std::exp(-0.5), 0.02);
  EXPECT_LE(r.type_two, 0.01);
}

TEST(ExactRisk, TwoSpheresEqualsPowerOfTwoExactly) {
  for (std::size_t n = 2; n <= 10; ++n) {
    const auto law = oracle::enumerate_empty_law(2, n);
    const auto expected = oracle::Rational(oracle::BigInt(2), oracle::BigInt(1) << n);
    // For n >= 2 the test rejects iff K = 1; under the alternate K = 1 always.
    ASSERT_EQ(law[1], expected);
    EXPECT_EQ(oracle::Rational(hominf::exact_lrt_risk(2, n).total), expected) << "n=" << n;
  }
}

TEST(ExactRisk, MatchesRationalEnumeration) {
  for (std::size_t m = 2; m <= 5; ++m) {
    for (std::size_t n = 0; n <= 8; ++n) {
      const auto null_law = oracle::enumerate_empty_law(m, n);
      const auto reduced_law = oracle::enumerate_empty_law(m - 1, n);
      oracle::Rational type_one = 0;
      oracle::Rational type_two = 0;
      for (std::size_t k = 0; k <= m; ++k) {
        if (rational_ratio(m, n, k) > 1) type_one += null_law[k];
      }
      for (std::size_t kp = 0; kp < m; ++kp) {
        if (!(rational_ratio(m, n, kp + 1) > 1)) type_two += reduced_law[kp];
      }
      const auto r = hominf::exact_lrt_risk(m, n);
      EXPECT_NEAR(r.type_one, oracle::to_double(type_one), 1e-12) << "m=" << m << " n=" << n;
      EXPECT_NEAR(r.type_two, oracle::to_double(type_two), 1e-12) << "m=" << m << " n=" << n;
    }
  }
}

TEST(ExactRisk, BeatsEveryThresholdTest) {
  for (std::size_t m = 2; m <= 20; ++m) {
    const double mlm = static_cast<double>(m) * std::log(static_cast<double>(m));
    for (const auto n : {m, static_cast<std::size_t>(std::lround(mlm)),
                         static_cast<std::size_t>(std::lround(3.0 * mlm))}) {
      const double lrt = hominf::exact_lrt_risk(m, n).total;
      for (std::size_t t = 0; t <= m + 1; ++t) {
        EXPECT_LE(lrt, hominf::occupancy_threshold_risk(m, n, t) + 1e-12)
            << "m=" << m << " n=" << n << " t=" << t;
      }
    }
  }
}

TEST(ExactRisk, ThresholdTestExtremes) {
  // t = 0 always rejects, t = m + 1 never does.
  EXPECT_NEAR(hominf::occupancy_threshold_risk(7, 20, 0), 1.0, 1e-12);
  EXPECT_NEAR(hominf::occupancy_threshold_risk(7, 20, 8), 1.0, 1e-12);
}

TEST(RiskLowerBound, DeltaCapsAndDecays) {
  EXPECT_EQ(hominf::risk_lower_bound(0, 0.25, 1, 0.1), 0.1);
  double prev = 1.0;
  for (std::size_t n = 0; n < 2000; n += 10) {
    const double v = hominf::risk_lower_bound(n, 1.0 / 16.0, 1, 0.5);
    EXPECT_LE(v, prev);
    prev = v;
  }
  EXPECT_LT(prev, 1e-40);
  const auto n_cross = static_cast<std::size_t>(std::ceil(std::log(16.0) * 16.0));
  EXPECT_NEAR(hominf::risk_lower_bound(n_cross, 1.0 / 16.0, 1, 10.0), 1.0, 0.07);
}

TEST(EstimatorTest, DecisionRule) {
  const auto pack = build_pack(1, 2, 1.0 / 16.0);
  EXPECT_EQ(hominf::test_from_estimator({{4}, 4}, pack), 0);
  EXPECT_EQ(hominf::test_from_estimator({{3}, 3}, pack), 1);
  EXPECT_EQ(hominf::test_from_estimator({{6}, 6}, pack), 0);
}

}  // namespace
