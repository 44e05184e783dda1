#include <gtest/gtest.h>

#include <cmath>

#include "oracles.hpp"
#include "polarc/counterexamples.hpp"
#include "polarc/product_poly.hpp"

using namespace polarc;
using oracle::error_code;

TEST(Family, SmallestCase) {
  const double c = 1.0 / std::sqrt(2.0);
  const auto want = UnitVectorSystem::create_real({{c, c, 0}, {c, c, 0}, {0, 0, 1}});
  EXPECT_EQ(family_system(2, 3), want);
}

TEST(Family, InvalidParams) {
  EXPECT_EQ(error_code([] { family_system(1, 4); }), Errc::invalid_params);
  EXPECT_EQ(error_code([] { family_system(6, 6); }), Errc::invalid_params);
  EXPECT_EQ(error_code([] { family_value_log(3, 2); }), Errc::invalid_params);
}

TEST(FamilyValue, Examples) {
  EXPECT_NEAR(family_value_log(6, 34), 6 * std::log(6.0) - 17 * std::log(64.0), 1e-12);
  EXPECT_NEAR(family_value_log(6, 34), -59.95045, 1e-5);
  EXPECT_NEAR(family_value_log(2, 3), std::log(4.0 / std::pow(5.0, 1.5)), 1e-14);
}

TEST(IsCounterexample, Examples) {
  const auto a = is_counterexample(6, 34);
  EXPECT_TRUE(a.is_ce);
  EXPECT_NEAR(a.log_gap, -0.00232668, 1e-7);
  const auto b = is_counterexample(6, 33);
  EXPECT_FALSE(b.is_ce);
  EXPECT_NEAR(b.log_gap, 0.0812086, 1e-6);
  const auto c = is_counterexample(2, 3);
  EXPECT_FALSE(c.is_ce);
  EXPECT_NEAR(c.log_gap, std::log(4.0) - 1.5 * std::log(5.0) + 1.5 * std::log(3.0), 1e-14);
}

TEST(IsCounterexample, SixBlockBoundary) {
  for (std::size_t n = 34; n <= 200; ++n) EXPECT_TRUE(is_counterexample(6, n).is_ce) << n;
  for (std::size_t n = 7; n <= 33; ++n) EXPECT_FALSE(is_counterexample(6, n).is_ce) << n;
}

// The closed form agrees with the certificate identity and a direct product
// evaluated at the all-plus mean vector.
TEST(IsCounterexample, MatchesMeanVectorEvaluation) {
  for (std::size_t d = 2; d <= 10; ++d) {
    for (std::size_t n = d + 1; n <= 60; ++n) {
      const auto sys = family_system(d, n);
      const auto plus = SignAssignment::all_plus(n);
      const auto x = mean_vector(sys, plus);
      const double direct = std::log(std::abs(oracle::naive_product(sys, x))) +
                            0.5 * double(n) * std::log(double(n));
      const auto ce = is_counterexample(d, n);
      EXPECT_NEAR(direct, ce.log_gap, 1e-9) << "d=" << d << " n=" << n;
      EXPECT_NEAR(y_inequality_gap(bang_certificate(sys, plus)), ce.log_gap, 1e-9);
      EXPECT_EQ(!y_inequality(bang_certificate(sys, plus)), ce.is_ce);
    }
  }
}

TEST(IsCounterexample, MatchesPrQuestion) {
  for (std::size_t d = 2; d <= 10; ++d) {
    for (std::size_t n = d + 1; n <= 16; ++n) {
      const auto q = pr_question(family_system(d, n));
      EXPECT_NEAR(q.log_gap, is_counterexample(d, n).log_gap, 1e-9) << "d=" << d << " n=" << n;
    }
  }
  for (std::size_t n : {33u, 34u, 40u, 60u}) {
    const auto q = pr_question(family_system(6, n));
    EXPECT_EQ(!q.holds, is_counterexample(6, n).is_ce) << n;
  }
}

TEST(Threshold, SixIsThirtyFour) { EXPECT_EQ(threshold_n0(6), 34u); }

TEST(Threshold, ScanAgreesWithDirectSearch) {
  for (std::size_t d = 4; d <= 10; ++d) {
    const std::size_t n0 = threshold_n0(d);
    EXPECT_FALSE(n0 - 1 > d && is_counterexample(d, n0 - 1).is_ce);
    for (std::size_t n = n0; n <= threshold_scan_cap(d); ++n) ASSERT_TRUE(is_counterexample(d, n).is_ce);
    EXPECT_GE(n0, 34u);
  }
  EXPECT_EQ(threshold_n0(7), 34u);
}

// For d <= 3 the gap tends to d ln d - (d^2 - d)/2 > 0, so no n0 exists.
TEST(Threshold, SmallBlocksHaveNone) {
  EXPECT_EQ(error_code([] { threshold_n0(2); }), Errc::not_found_in_range);
  EXPECT_EQ(error_code([] { threshold_n0(3); }), Errc::not_found_in_range);
  EXPECT_GT(2 * std::log(2.0) - 1.0, 0.0);
  EXPECT_GT(3 * std::log(3.0) - 3.0, 0.0);
  EXPECT_EQ(error_code([] { threshold_n0(1); }), Errc::invalid_params);
}

TEST(AlternativeSigns, Examples) {
  const auto a = alternative_sign_value(34);
  EXPECT_NEAR(a.value_log, std::log(64.0) - 17 * std::log(32.0), 1e-12);
  EXPECT_NEAR(a.threshold_log, -17 * std::log(34.0), 1e-12);
  EXPECT_TRUE(a.beats_threshold);
  EXPECT_EQ(a.length_sq, 32.0);
  const auto b = alternative_sign_value(7);
  EXPECT_NEAR(b.value_log, 6 * std::log(2.0) - 3.5 * std::log(5.0), 1e-12);
  EXPECT_NEAR(b.value_log, -1.473, 2e-3);
  EXPECT_NEAR(b.threshold_log, -6.811, 1e-3);
  EXPECT_TRUE(b.beats_threshold);
  EXPECT_EQ(error_code([] { alternative_sign_value(6); }), Errc::invalid_params);
}

TEST(AlternativeSigns, MatchesDirectEvaluation) {
  for (std::size_t n = 7; n <= 60; ++n) {
    const auto sys = family_system(6, n);
    std::vector<int> s(n, 1);
    s[4] = s[5] = -1;
    const auto eps = SignAssignment::real(s);
    const auto x = mean_vector(sys, eps);
    const double direct = std::log(std::abs(oracle::naive_product(sys, x)));
    EXPECT_NEAR(alternative_sign_value(n).value_log, direct, 1e-10) << n;
    EXPECT_NEAR(oracle::signed_length_sq(sys, s), double(n) - 2.0, 1e-10);
  }
}

TEST(VerifySigns, Examples) {
  EXPECT_TRUE(verify_maximal_signs(6, 20, SignCheckMode::exhaustive));
  EXPECT_TRUE(verify_maximal_signs(6, 34, SignCheckMode::flip_local));
  EXPECT_TRUE(verify_maximal_signs(2, 3, SignCheckMode::exhaustive));
}

TEST(VerifySigns, BruteForceOracle) {
  for (std::size_t n = 7; n <= 16; ++n) {
    const auto brute = oracle::brute_force_signs(family_system(6, n));
    EXPECT_NEAR(brute.best_sq, 36.0 + double(n - 6), 1e-9);
    EXPECT_EQ(brute.pattern, std::vector<int>(n, 1));
  }
}
