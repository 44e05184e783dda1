#include "polarc/product_poly.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "polarc/error.hpp"

namespace polarc {

namespace {

constexpr std::size_t kDirectProductLimit = 30;
constexpr double kCrossCheckTol = 1e-10;
constexpr double kLogGapTol = 1e-12;
constexpr double kCloseOnBound = 3.5;

double expineq_f(double t) { return (1.0 + t) * (1.0 + t) - std::exp(t); }

}  // namespace

double ProductValue::abs() const { return zero ? 0.0 : std::exp(log_abs); }

Scalar ProductValue::value() const { return zero ? Scalar{} : abs() * phase; }

ProductValue ProductPolynomial::evaluate(std::span<const Scalar> x) const {
  if (x.size() != system_.dim()) {
    throw Error(Errc::dimension_mismatch, "point has dimension " + std::to_string(x.size()) +
                                              ", polynomial expects " +
                                              std::to_string(system_.dim()));
  }
  const std::size_t m = system_.size();
  std::vector<Scalar> factors(m);
  for (std::size_t j = 0; j < m; ++j) {
    factors[j] = inner(x, system_[j]);
    if (factors[j] == Scalar{}) return {true, -std::numeric_limits<double>::infinity(), {1.0, 0.0}};
  }

  if (m <= kDirectProductLimit) {
    Scalar prod{1.0, 0.0};
    for (const auto& f : factors) prod *= f;
    const double mag = std::abs(prod);
    if (mag > 0.0 && std::isfinite(mag)) return {false, std::log(mag), prod / mag};
  }
  ProductValue out;
  out.log_abs = 0.0;
  for (const auto& f : factors) {
    const double mag = std::abs(f);
    out.log_abs += std::log(mag);
    out.phase *= f / mag;
  }
  out.phase /= std::abs(out.phase);
  return out;
}

ProductValue ProductPolynomial::evaluate(std::span<const double> x) const {
  const Vector z(x.begin(), x.end());
  return evaluate(std::span<const Scalar>(z));
}

PrValue pr_value(const UnitVectorSystem& system) {
  const std::size_t m = system.size();
  PrValue out;
  if (system.is_real()) {
    if (m <= kMaxExhaustiveSize) {
      auto res = maximize_signs_exhaustive(system);
      out.signs = std::move(res.signs);
      out.global = true;
      out.tied = res.ties > 0;
    } else {
      out.signs = maximize_signs_flip_ascent(system, SignAssignment::all_plus(m));
    }
  } else {
    auto res = maximize_phases_from(system, SignAssignment::all_plus(m, SignKind::complex_phases));
    out.signs = std::move(res.signs);
  }

  out.y = bang_certificate(system, out.signs);
  const Vector x = mean_vector(system, out.signs);
  out.length = norm(signed_sum(system, out.signs));
  const ProductValue direct = ProductPolynomial(system).evaluate(x);
  out.log_value_direct = direct.log_abs;

  double sum_y = 0.0;
  double sum_log_y = 0.0;
  for (double yj : out.y) {
    if (!(yj > 0.0)) {
      throw Error(Errc::cross_check_failure, "nonpositive certificate value at a maximizing pattern");
    }
    sum_y += yj;
    sum_log_y += std::log(yj);
  }
  out.log_value = sum_log_y - 0.5 * static_cast<double>(m) * std::log(sum_y);
  out.value = std::exp(out.log_value);

  if (direct.zero || std::abs(std::expm1(out.log_value_direct - out.log_value)) > kCrossCheckTol) {
    throw Error(Errc::cross_check_failure,
                "direct ln|P| = " + std::to_string(out.log_value_direct) +
                    " disagrees with y-identity value " + std::to_string(out.log_value));
  }
  return out;
}

PrQuestion pr_question(const UnitVectorSystem& system) {
  if (system.size() != system.dim()) {
    throw Error(Errc::dimension_mismatch, "mean-vector test needs as many vectors as dimensions");
  }
  PrQuestion out;
  out.pr = pr_value(system);
  const double m = static_cast<double>(system.size());
  out.log_threshold = -0.5 * m * std::log(m);
  out.log_gap = out.pr.log_value - out.log_threshold;
  out.holds = out.log_gap >= -kLogGapTol;
  return out;
}

double y_inequality_gap(std::span<const double> y) {
  if (y.empty()) throw Error(Errc::invalid_params, "empty y array");
  double sum = 0.0;
  double sum_log = 0.0;
  for (double v : y) {
    if (!(v > 0.0)) throw Error(Errc::non_positive, "y values must be positive");
    sum += v;
    sum_log += std::log(v);
  }
  const double m = static_cast<double>(y.size());
  return sum_log - 0.5 * m * std::log(sum / m);
}

bool y_inequality(std::span<const double> y) { return y_inequality_gap(y) >= -kLogGapTol; }

CloseOnCheck closeon_check(const UnitVectorSystem& system) {
  if (system.size() != system.dim()) {
    throw Error(Errc::dimension_mismatch, "criterion needs as many vectors as dimensions");
  }
  const PrValue pr = pr_value(system);
  CloseOnCheck out;
  out.y = pr.y;
  out.signs_global = pr.global;
  const bool bounded =
      std::all_of(out.y.begin(), out.y.end(), [](double v) { return v <= kCloseOnBound; });
  out.hypothesis_met = out.signs_global && bounded;
  out.margin = y_inequality_gap(out.y);
  out.conclusion_holds = out.margin >= -kLogGapTol;
  return out;
}

ExpChain texpineq_chain(std::span<const double> t) {
  if (t.empty()) throw Error(Errc::invalid_params, "empty t array");
  static const double t0 = expineq_root();
  ExpChain out;
  out.in_proven_region = true;
  for (double v : t) {
    if (!(v >= 0.0)) throw Error(Errc::non_positive, "t values must be nonnegative");
    out.lhs += 2.0 * std::log1p(v);
    out.mid += v;
    if (v > t0) out.in_proven_region = false;
  }
  const double m = static_cast<double>(t.size());
  out.rhs = m * std::log1p(out.mid / m);
  if (out.in_proven_region) {
    const double slack = 1e-12 * (1.0 + out.mid);
    if (out.lhs < out.mid - slack || out.mid < out.rhs - slack) {
      throw Error(Errc::cross_check_failure, "exponential chain fails inside its proven region");
    }
  }
  return out;
}

double expineq_root() {
  double lo = 2.0;
  double hi = 3.0;
  // f(2) > 0 > f(3)
  while (hi - lo > 1e-12) {
    const double mid = 0.5 * (lo + hi);
    (expineq_f(mid) > 0.0 ? lo : hi) = mid;
  }
  const double t0 = 0.5 * (lo + hi);
  if (!(t0 > 2.5)) throw Error(Errc::cross_check_failure, "root fell below 2.5");
  return t0;
}

}  // namespace polarc
