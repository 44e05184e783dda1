#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>

#include "polarc/product_poly.hpp"

namespace polarc {

struct OptimizerOptions {
  std::size_t starts = 64;
  std::size_t max_iters = 500;
  double step = 0.1;
  double tol = 1e-10;
  std::uint64_t seed = 0;
  /// Called with (start, iteration, objective) at every accepted point.
  std::function<void(std::size_t, std::size_t, double)> trace;
};

/// A witnessed lower bound on sup |P| over a unit sphere.
struct NormEstimate {
  double value = 0.0;
  double log_value = 0.0;
  Vector witness;
  std::size_t starts = 0;
  std::size_t converged_starts = 0;
  std::size_t iterations_total = 0;
  std::size_t best_start = 0;
};

/// Multi-start projected gradient ascent of sum_j ln|<x, a_j>| over the real
/// unit sphere. Needs a real system.
NormEstimate norm_real(const ProductPolynomial& p, const OptimizerOptions& opts = {});

/// Same ascent over the complex unit sphere, realified to dimension 2n. Real
/// systems are promoted.
NormEstimate norm_complex(const ProductPolynomial& p, const OptimizerOptions& opts = {});

/// Exhaustive evaluation on an angular grid of the real sphere (dim <= 3;
/// resolution points per angle).
NormEstimate grid_oracle(const ProductPolynomial& p, std::size_t resolution);

/// Lipschitz bound on how far grid_oracle can fall below the true sup.
double grid_error_bound(const ProductPolynomial& p, std::size_t resolution);

struct RatioReport {
  NormEstimate real;
  NormEstimate complex;
  double ratio = 0.0;
  double bound = 0.0;  // 2^{(m-2)/2}
};

/// Complex-to-real norm ratio for a real system of degree >= 2; throws
/// BoundViolation if the ratio exceeds 2^{(m-2)/2} (1 + 1e-6).
RatioReport ratio_complex_real(const ProductPolynomial& p, const OptimizerOptions& opts = {});

/// Norm of the tangential gradient of sum ln|<z, a_j>| at a unit point,
/// over the real sphere (Field::real) or the realified complex sphere.
double projected_gradient_norm(const ProductPolynomial& p, std::span<const Scalar> z, Field field);

/// Max relative deviation between the analytic tangent gradient and central
/// differences with step h along an orthonormal tangent frame at x.
double gradient_check(const ProductPolynomial& p, std::span<const double> x, double h);

}  // namespace polarc
