#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "polarc/signs.hpp"
#include "polarc/vector_system.hpp"

namespace polarc {

/// Value of a product of linear forms, kept as log-magnitude plus a unit
/// phase so that products of many small factors do not underflow.
struct ProductValue {
  bool zero = false;
  double log_abs = 0.0;  // -inf when zero
  Scalar phase{1.0, 0.0};

  double abs() const;
  Scalar value() const;
};

/// P(x) = prod_j <x, a_j> over the functional vectors of a system.
class ProductPolynomial {
 public:
  explicit ProductPolynomial(UnitVectorSystem system) : system_(std::move(system)) {}

  const UnitVectorSystem& system() const noexcept { return system_; }
  std::size_t degree() const noexcept { return system_.size(); }
  std::size_t dim() const noexcept { return system_.dim(); }

  /// Direct product for degree <= 30, log accumulation beyond. A zero
  /// factor short-circuits to an exact zero.
  ProductValue evaluate(std::span<const Scalar> x) const;
  ProductValue evaluate(std::span<const double> x) const;

 private:
  UnitVectorSystem system_;
};

/// Result of the mean-vector test at the length-maximizing sign or phase
/// pattern.
struct PrValue {
  SignAssignment signs = SignAssignment::all_plus(0);
  /// True when the pattern is a proven global maximizer (exhaustive search).
  /// False for flip-local real patterns (m > 24) and phase fixed points.
  bool global = false;
  double length = 0.0;
  std::vector<double> y;
  double log_value = 0.0;  // ln |P(x)|, from sum ln y_j - (m/2) ln sum y_j
  double log_value_direct = 0.0;
  double value = 0.0;
  /// Other patterns tie the maximal length (their values may differ).
  bool tied = false;
};

/// |P(x)| at the mean vector x of the maximal-length signed sum, computed by
/// direct evaluation and by the y-identity and cross-checked to 1e-10
/// relative (CrossCheckFailure otherwise). Real systems use exhaustive
/// search up to 24 vectors and flip ascent from all-plus beyond; complex
/// systems use phase ascent from all-ones.
PrValue pr_value(const UnitVectorSystem& system);

struct PrQuestion {
  PrValue pr;
  double log_threshold = 0.0;  // -(m/2) ln m
  double log_gap = 0.0;        // log_value - log_threshold
  bool holds = false;
};

/// Checks |P(x)| >= m^{-m/2} at the mean vector, in log space. Needs m = dim.
PrQuestion pr_question(const UnitVectorSystem& system);

/// sum_j ln y_j - (m/2) ln(mean y). Zero exactly at equality in
/// y_1^2...y_m^2 >= (mean y)^m; equals the mean-vector log gap when y are
/// certificate values. NonPositive if some y_j <= 0.
double y_inequality_gap(std::span<const double> y);

/// True when the squared-product inequality holds (gap >= -1e-12).
bool y_inequality(std::span<const double> y);

struct CloseOnCheck {
  bool signs_global = false;
  bool hypothesis_met = false;  // global signs and every y_j <= 3.5
  bool conclusion_holds = false;
  double margin = 0.0;
  std::vector<double> y;
};

/// Evaluates the near-orthonormal criterion. Reports instead of throwing when
/// the hypothesis fails.
CloseOnCheck closeon_check(const UnitVectorSystem& system);

struct ExpChain {
  double lhs = 0.0;  // sum 2 ln(1 + t_j)
  double mid = 0.0;  // sum t_j
  double rhs = 0.0;  // m ln(1 + mean t)
  bool in_proven_region = false;
};

/// Log-space terms of prod (1+t_j)^2 >= e^{sum t} >= (1 + mean t)^m. When
/// every t_j lies in [0, t0] the chain is asserted (CrossCheckFailure).
ExpChain texpineq_chain(std::span<const double> t);

/// Root t0 of (1+t)^2 - e^t on [2, 3], by bisection to 1e-12.
double expineq_root();

}  // namespace polarc
