#include <gtest/gtest.h>

#include <cmath>

#include "oracles.hpp"
#include "polarc/counterexamples.hpp"
#include "polarc/signs.hpp"

using namespace polarc;
using oracle::error_code;

TEST(SignedSum, AllPlusOnBasis) {
  const auto sum = signed_sum(orthonormal(2), SignAssignment::all_plus(2));
  EXPECT_EQ(sum, (Vector{1.0, 1.0}));
}

TEST(SignedSum, PhasesOnRealSystemRejected) {
  EXPECT_EQ(error_code([] {
              signed_sum(orthonormal(2), SignAssignment::all_plus(2, SignKind::complex_phases));
            }),
            Errc::kind_mismatch);
}

TEST(SignedSum, SizeMismatch) {
  EXPECT_EQ(error_code([] { signed_sum(orthonormal(2), SignAssignment::all_plus(3)); }),
            Errc::dimension_mismatch);
}

TEST(SignAssignment, RejectsBadEntries) {
  EXPECT_EQ(error_code([] { SignAssignment::real({1, 0}); }), Errc::invalid_params);
  EXPECT_EQ(error_code([] { SignAssignment::phases({Scalar{2.0, 0.0}}); }),
            Errc::invalid_params);
}

TEST(MeanVector, ZeroSum) {
  const auto sys = UnitVectorSystem::create_real({{1, 0}, {-1, 0}});
  EXPECT_EQ(error_code([&] { mean_vector(sys, SignAssignment::all_plus(2)); }), Errc::zero_sum);
}

TEST(MeanVector, UnitLength) {
  const auto x = mean_vector(orthonormal(3), SignAssignment::all_plus(3));
  EXPECT_NEAR(norm(x), 1.0, 1e-15);
}

TEST(BangCertificate, SumsToSquaredLength) {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const auto sys = random_system(Field::complex, 3, 5, seed);
    const auto eps = SignAssignment::all_plus(5, SignKind::complex_phases);
    double total = 0.0;
    for (double y : bang_certificate(sys, eps)) total += y;
    EXPECT_NEAR(total, norm_sq(signed_sum(sys, eps)), 1e-12);
  }
}

TEST(Exhaustive, FamilyAllPlusIsMaximal) {
  const auto res = maximize_signs_exhaustive(family_system(6, 20));
  EXPECT_EQ(res.signs, SignAssignment::all_plus(20));
  EXPECT_NEAR(res.length * res.length, 50.0, 1e-9);
}

TEST(Exhaustive, OrthonormalTiesEverywhere) {
  const auto res = maximize_signs_exhaustive(orthonormal(4));
  EXPECT_EQ(res.signs, SignAssignment::all_plus(4));
  EXPECT_NEAR(res.length, 2.0, 1e-15);
  EXPECT_EQ(res.ties, 7u);
}

TEST(Exhaustive, Limits) {
  EXPECT_EQ(error_code([] { maximize_signs_exhaustive(random_system(Field::real, 2, 25, 0)); }),
            Errc::too_large);
  EXPECT_EQ(error_code([] { maximize_signs_exhaustive(random_system(Field::complex, 2, 3, 0)); }),
            Errc::kind_mismatch);
}

TEST(Exhaustive, SingleVector) {
  const auto res = maximize_signs_exhaustive(orthonormal(1));
  EXPECT_EQ(res.signs, SignAssignment::all_plus(1));
  EXPECT_EQ(res.length, 1.0);
}

TEST(Exhaustive, MatchesBruteForceOracle) {
  std::size_t checked = 0;
  for (std::uint64_t seed = 0; seed < 1000; ++seed) {
    const std::size_t n = 1 + seed % 12;
    const std::size_t m = 1 + (seed * 7) % 12;
    const auto sys = random_system(Field::real, n, m, 50000 + seed);
    const auto res = maximize_signs_exhaustive(sys);
    const auto brute = oracle::brute_force_signs(sys);
    ASSERT_NEAR(res.length * res.length, brute.best_sq, 1e-9 * std::max(1.0, brute.best_sq))
        << "seed " << seed;
    EXPECT_EQ(res.signs.signs(), brute.pattern) << "seed " << seed;
    ++checked;
  }
  EXPECT_EQ(checked, 1000u);
}

TEST(Exhaustive, MaximizerCertificateAtLeastOne) {
  for (std::uint64_t seed = 0; seed < 1000; ++seed) {
    const std::size_t n = 2 + seed % 11;
    const std::size_t m = 1 + seed % 12;
    const auto sys = random_system(Field::real, n, m, seed);
    const auto res = maximize_signs_exhaustive(sys);
    for (double y : bang_certificate(sys, res.signs)) ASSERT_GE(y, 1.0 - 1e-9) << "seed " << seed;
  }
}

TEST(Exhaustive, GlobalNegationKeepsLength) {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const auto sys = random_system(Field::real, 4, 6, seed);
    const auto res = maximize_signs_exhaustive(sys);
    const auto neg = res.signs.rotated(Scalar{-1.0, 0.0});
    EXPECT_NEAR(norm(signed_sum(sys, neg)), res.length, 1e-12);
  }
}

TEST(FlipAscent, OrthonormalStartIsFixedPoint) {
  const auto start = SignAssignment::real({1, -1, 1, -1});
  EXPECT_EQ(maximize_signs_flip_ascent(orthonormal(4), start), start);
}

TEST(FlipAscent, ResultIsFlipLocal) {
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const auto sys = random_system(Field::real, 5, 30, seed);
    const auto eps = maximize_signs_flip_ascent(sys, std::nullopt, seed);
    for (double y : bang_certificate(sys, eps)) ASSERT_GE(y, 1.0 - 1e-9);
  }
}

TEST(FlipAscent, SeededStartIsDeterministic) {
  const auto sys = random_system(Field::real, 5, 30, 4);
  EXPECT_EQ(maximize_signs_flip_ascent(sys, std::nullopt, 9),
            maximize_signs_flip_ascent(sys, std::nullopt, 9));
}

TEST(FlipAscent, NeverBelowStart) {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const auto sys = random_system(Field::real, 3, 10, seed);
    const auto start = SignAssignment::all_plus(10);
    const auto eps = maximize_signs_flip_ascent(sys, start);
    EXPECT_GE(norm(signed_sum(sys, eps)), norm(signed_sum(sys, start)) - 1e-12);
  }
}

TEST(Phases, StationaryAndCertified) {
  const auto sys = random_system(Field::complex, 6, 6, 11);
  const auto res = maximize_phases(sys, 0);
  const Vector a = signed_sum(sys, res.signs);
  for (std::size_t j = 0; j < sys.size(); ++j) {
    Vector term(sys[j]);
    for (auto& c : term) c *= res.signs[j];
    const Scalar y = inner(a, term);
    EXPECT_LT(std::abs(y.imag()), 1e-9);
    EXPECT_GE(y.real(), 1.0 - 1e-9);
  }
  EXPECT_NEAR(res.length, norm(a), 1e-12);
}

TEST(Phases, AtLeastBestRealPattern) {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const auto real_sys = random_system(Field::real, 3, 6, seed);
    const double real_best = maximize_signs_exhaustive(real_sys).length;
    const auto res = maximize_phases_from(
        real_sys.promoted(),
        SignAssignment::phases([&] {
          std::vector<Scalar> p;
          for (int s : maximize_signs_exhaustive(real_sys).signs.signs()) p.emplace_back(s, 0.0);
          return p;
        }()));
    EXPECT_GE(res.length, real_best - 1e-12);
  }
}

TEST(Phases, RealSystemRejected) {
  EXPECT_EQ(error_code([] { maximize_phases(orthonormal(3), 0); }), Errc::kind_mismatch);
}

TEST(Phases, Deterministic) {
  const auto sys = random_system(Field::complex, 4, 7, 2);
  EXPECT_EQ(maximize_phases(sys, 5).signs, maximize_phases(sys, 5).signs);
}

TEST(SignedSum, ExamplesFromDefinition) {
  const auto sum = signed_sum(orthonormal(3), SignAssignment::all_plus(3));
  EXPECT_NEAR(norm(sum), std::sqrt(3.0), 1e-15);
  const auto pair = UnitVectorSystem::create_real({{0.6, 0.8}, {0.6, 0.8}});
  EXPECT_EQ(norm(signed_sum(pair, SignAssignment::real({1, -1}))), 0.0);
  EXPECT_NEAR(norm_sq(signed_sum(family_system(6, 34), SignAssignment::all_plus(34))), 64.0,
              1e-10);
}

TEST(Exhaustive, AntipodalPair) {
  const auto res = maximize_signs_exhaustive(UnitVectorSystem::create_real({{1, 0}, {-1, 0}}));
  EXPECT_EQ(res.signs, SignAssignment::real({1, -1}));
  EXPECT_EQ(res.length, 2.0);
}

TEST(FlipAscent, GlobalMaximumUnchanged) {
  const auto sys = random_system(Field::real, 4, 9, 21);
  const auto best = maximize_signs_exhaustive(sys).signs;
  EXPECT_EQ(maximize_signs_flip_ascent(sys, best), best);
}

TEST(FlipAscent, OrthonormalTenAnyStart) {
  const auto start = SignAssignment::real({1, -1, -1, 1, 1, -1, 1, 1, -1, -1});
  EXPECT_EQ(maximize_signs_flip_ascent(orthonormal(10), start), start);
}

TEST(Phases, ComplexOrthonormalCertificateIsOne) {
  const auto res = maximize_phases(orthonormal(4, Field::complex), 3);
  for (double y : bang_certificate(orthonormal(4, Field::complex), res.signs)) {
    EXPECT_NEAR(y, 1.0, 1e-12);
  }
}

TEST(Phases, RepeatedVectorAligns) {
  const auto sys = UnitVectorSystem::create(
      Field::complex, {Vector{Scalar{0.6, 0.0}, Scalar{0.0, 0.8}}, Vector{Scalar{0.6, 0.0}, Scalar{0.0, 0.8}}});
  EXPECT_NEAR(maximize_phases(sys, 1).length, 2.0, 1e-10);
}

TEST(BangCertificate, Examples) {
  for (double y : bang_certificate(orthonormal(5), SignAssignment::all_plus(5))) EXPECT_EQ(y, 1.0);
  const auto fam = bang_certificate(family_system(6, 34), SignAssignment::all_plus(34));
  for (std::size_t j = 0; j < 34; ++j) EXPECT_NEAR(fam[j], j < 6 ? 6.0 : 1.0, 1e-12);
  const auto anti = bang_certificate(UnitVectorSystem::create_real({{1, 0}, {-1, 0}}),
                                     SignAssignment::all_plus(2));
  EXPECT_EQ(anti, (std::vector<double>{0.0, 0.0}));
}

TEST(MeanVector, Examples) {
  const auto x = mean_vector(orthonormal(4), SignAssignment::all_plus(4));
  for (const auto& c : x) EXPECT_NEAR(std::abs(c - 0.5), 0.0, 1e-15);
  const auto sys = family_system(6, 34);
  const auto z = mean_vector(sys, SignAssignment::all_plus(34));
  const auto sum = signed_sum(sys, SignAssignment::all_plus(34));
  for (std::size_t k = 0; k < 34; ++k) EXPECT_NEAR(std::abs(z[k] - sum[k] / 8.0), 0.0, 1e-14);
}
