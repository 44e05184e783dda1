#include <gtest/gtest.h>

#include <cmath>

#include "oracles.hpp"
#include "polarc/chebyshev.hpp"
#include "polarc/sphere_norm.hpp"

using namespace polarc;
using oracle::error_code;

namespace {

OptimizerOptions quick(std::size_t starts = 16) {
  OptimizerOptions o;
  o.starts = starts;
  return o;
}

}  // namespace

TEST(NormReal, Orthonormal) {
  for (std::size_t n = 2; n <= 6; ++n) {
    const ProductPolynomial p(orthonormal(n));
    const auto est = norm_real(p, quick());
    const double want = std::pow(double(n), -0.5 * double(n));
    EXPECT_NEAR(est.value / want, 1.0, 1e-6) << "n=" << n;
    for (const auto& c : est.witness) EXPECT_NEAR(std::abs(c), 1.0 / std::sqrt(double(n)), 1e-5);
  }
}

TEST(NormReal, SingleVector) {
  const auto est = norm_real(ProductPolynomial(orthonormal(1)), quick(4));
  EXPECT_NEAR(est.value, 1.0, 1e-15);
  EXPECT_NEAR(std::abs(est.witness[0]), 1.0, 1e-15);
}

TEST(NormReal, RandomMatchesGridOracle) {
  const ProductPolynomial p(random_system(Field::real, 3, 3, 4));
  const auto est = norm_real(p, quick());
  const auto grid = grid_oracle(p, 600);
  EXPECT_NEAR(est.value / grid.value, 1.0, 1e-3);
  EXPECT_GE(est.value, grid.value * (1 - 1e-12));
}

TEST(NormReal, CircleMatchesIndependentGrid) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const auto sys = random_system(Field::real, 2, 2 + seed % 5, seed);
    const auto est = norm_real(ProductPolynomial(sys), quick());
    const double grid = oracle::circle_grid_max(sys, 200000);
    EXPECT_GE(est.value, grid * (1 - 1e-12));
    EXPECT_LE(est.value - grid, double(sys.size()) * 3.2e-5);
  }
}

TEST(NormReal, NeedsRealSystem) {
  EXPECT_EQ(error_code([] { norm_real(ProductPolynomial(random_system(Field::complex, 2, 2, 0))); }),
            Errc::kind_mismatch);
}

TEST(NormReal, RejectsZeroStarts) {
  OptimizerOptions o;
  o.starts = 0;
  EXPECT_EQ(error_code([&] { norm_real(ProductPolynomial(orthonormal(2)), o); }),
            Errc::invalid_params);
}

TEST(NormReal, Deterministic) {
  const ProductPolynomial p(random_system(Field::real, 4, 5, 8));
  const auto a = norm_real(p, quick());
  const auto b = norm_real(p, quick());
  EXPECT_EQ(a.value, b.value);
  EXPECT_EQ(a.witness, b.witness);
  EXPECT_EQ(a.iterations_total, b.iterations_total);
}

TEST(NormReal, WitnessIsStationary) {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const ProductPolynomial p(random_system(Field::real, 3, 4, 100 + seed));
    const auto est = norm_real(p, quick());
    EXPECT_LT(projected_gradient_norm(p, est.witness, Field::real), 1e-8);
    EXPECT_NEAR(norm(est.witness), 1.0, 1e-12);
  }
}

TEST(NormReal, TraceIsMonotonePerStart) {
  OptimizerOptions o = quick(8);
  std::vector<std::vector<double>> seen(o.starts);
  o.trace = [&](std::size_t s, std::size_t, double f) { seen[s].push_back(f); };
  norm_real(ProductPolynomial(random_system(Field::real, 5, 7, 2)), o);
  for (const auto& run : seen) {
    ASSERT_FALSE(run.empty());
    for (std::size_t i = 1; i < run.size(); ++i) EXPECT_GT(run[i], run[i - 1]);
  }
}

TEST(NormComplex, OrthonormalPromoted) {
  for (std::size_t n = 2; n <= 5; ++n) {
    const auto est = norm_complex(ProductPolynomial(orthonormal(n)), quick());
    EXPECT_NEAR(est.value / std::pow(double(n), -0.5 * double(n)), 1.0, 1e-6);
  }
}

TEST(NormComplex, SingleForm) {
  const auto est = norm_complex(ProductPolynomial(random_system(Field::complex, 4, 1, 3)), quick(4));
  EXPECT_NEAR(est.value, 1.0, 1e-10);
}

TEST(NormComplex, WitnessIsStationary) {
  const ProductPolynomial p(random_system(Field::complex, 3, 4, 6));
  const auto est = norm_complex(p, quick());
  EXPECT_LT(projected_gradient_norm(p, est.witness, Field::complex), 1e-8);
}

TEST(NormComplex, EmbeddedChebyshevThree) {
  const ProductPolynomial p(embed_in_dimension(rn_factorization(3), 3));
  const auto re = norm_real(p, quick(32));
  const auto cx = norm_complex(p, quick(32));
  EXPECT_NEAR(re.value, 0.25, 1e-8);
  EXPECT_NEAR(cx.value / re.value, std::sqrt(2.0), 1e-4);
}

TEST(GridOracle, OrthonormalPlane) {
  const auto g = grid_oracle(ProductPolynomial(orthonormal(2)), 100000);
  EXPECT_NEAR(g.value, 0.5, 1e-8);
}

TEST(GridOracle, OrthonormalSpace) {
  const auto g = grid_oracle(ProductPolynomial(orthonormal(3)), 2000);
  EXPECT_NEAR(g.value, std::pow(3.0, -1.5), 1e-4);
}

TEST(GridOracle, ChebyshevTwoFactors) {
  const auto g = grid_oracle(ProductPolynomial(embed_in_dimension(rn_factorization(2), 2)), 100000);
  EXPECT_NEAR(g.value, 0.5, 1e-8);
}

TEST(GridOracle, ErrorBoundCoversGap) {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const ProductPolynomial p(random_system(Field::real, 2, 3, seed));
    const auto coarse = grid_oracle(p, 50);
    const auto fine = grid_oracle(p, 100000);
    EXPECT_LE(fine.value - coarse.value, grid_error_bound(p, 50));
  }
}

TEST(GridOracle, Limits) {
  EXPECT_EQ(error_code([] { grid_oracle(ProductPolynomial(orthonormal(4)), 10); }),
            Errc::too_high_dimensional);
  EXPECT_EQ(error_code([] {
              grid_oracle(ProductPolynomial(random_system(Field::complex, 2, 2, 0)), 10);
            }),
            Errc::kind_mismatch);
}

TEST(Ratio, OrthonormalIsOne) {
  for (std::size_t n = 2; n <= 4; ++n) {
    const auto r = ratio_complex_real(ProductPolynomial(orthonormal(n)), quick());
    EXPECT_NEAR(r.ratio, 1.0, 1e-4);
  }
}

TEST(Ratio, EmbeddedChebyshevFourIsSharp) {
  const auto r = ratio_complex_real(ProductPolynomial(embed_in_dimension(rn_factorization(4), 4)),
                                    quick(32));
  EXPECT_NEAR(r.ratio, 2.0, 1e-3);
  EXPECT_EQ(r.bound, 2.0);
}

TEST(Ratio, DegreeTwoNeverExceedsOne) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const auto r = ratio_complex_real(ProductPolynomial(random_system(Field::real, 3, 2, seed)), quick());
    EXPECT_LE(r.ratio, 1.0 + 1e-6);
  }
}

TEST(Ratio, DegreeOneRejected) {
  EXPECT_EQ(error_code([] { ratio_complex_real(ProductPolynomial(orthonormal(1))); }),
            Errc::invalid_params);
}

TEST(GradientCheck, OrthonormalDiagonal) {
  const std::vector<double> x(3, 1.0 / std::sqrt(3.0));
  EXPECT_LT(gradient_check(ProductPolynomial(orthonormal(3)), x, 1e-6), 1e-5);
}

TEST(GradientCheck, RandomSafePoints) {
  std::size_t checked = 0;
  for (std::uint64_t seed = 0; checked < 50; ++seed) {
    const ProductPolynomial p(random_system(Field::real, 4, 5, seed));
    const auto pts = random_system(Field::real, 4, 1, 7000 + seed);
    std::vector<double> x;
    for (const auto& c : pts[0]) x.push_back(c.real());
    try {
      EXPECT_LT(gradient_check(p, x, 1e-6), 1e-5);
      ++checked;
    } catch (const Error& e) {
      ASSERT_EQ(e.code(), Errc::too_close_to_zero_set);
    }
  }
}

TEST(GradientCheck, NearZeroSet) {
  const std::vector<double> x{1.0, 1e-7};
  EXPECT_EQ(error_code([&] { gradient_check(ProductPolynomial(orthonormal(2)), x, 1e-6); }),
            Errc::too_close_to_zero_set);
}
