#include "polarc/counterexamples.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "polarc/error.hpp"
#include "polarc/signs.hpp"

namespace polarc {

namespace {

void require_params(std::size_t d, std::size_t n) {
  if (d < 2 || n <= d) {
    throw Error(Errc::invalid_params, "family needs n > d >= 2 (got d=" + std::to_string(d) +
                                          ", n=" + std::to_string(n) + ")");
  }
}

}  // namespace

UnitVectorSystem family_system(std::size_t d, std::size_t n) {
  require_params(d, n);
  const double c = 1.0 / std::sqrt(static_cast<double>(d));
  std::vector<std::vector<double>> vs;
  vs.reserve(n);
  std::vector<double> b(n, 0.0);
  std::fill_n(b.begin(), d, c);
  for (std::size_t j = 0; j < d; ++j) vs.push_back(b);
  for (std::size_t j = d; j < n; ++j) {
    std::vector<double> e(n, 0.0);
    e[j] = 1.0;
    vs.push_back(std::move(e));
  }
  return UnitVectorSystem::create_real(vs);
}

double family_value_log(std::size_t d, std::size_t n) {
  require_params(d, n);
  const double dd = static_cast<double>(d);
  const double nn = static_cast<double>(n);
  return dd * std::log(dd) - 0.5 * nn * std::log(nn + dd * dd - dd);
}

CounterexampleCheck is_counterexample(std::size_t d, std::size_t n) {
  const double gap = family_value_log(d, n) + 0.5 * static_cast<double>(n) *
                                                  std::log(static_cast<double>(n));
  return {gap < 0.0, gap};
}

std::size_t threshold_n0(std::size_t d) {
  if (d < 2) throw Error(Errc::invalid_params, "block size must be at least 2");
  const std::size_t cap = threshold_scan_cap(d);
  if (!is_counterexample(d, cap).is_ce) {
    throw Error(Errc::not_found_in_range,
                "d=" + std::to_string(d) + " is not a counterexample at the scan cap n=" +
                    std::to_string(cap));
  }
  std::size_t n0 = cap;
  while (n0 - 1 > d && is_counterexample(d, n0 - 1).is_ce) --n0;
  return n0;
}

AlternativeSignValue alternative_sign_value(std::size_t n) {
  if (n < 7) throw Error(Errc::invalid_params, "alternative pattern needs n >= 7");
  const double nn = static_cast<double>(n);
  AlternativeSignValue out;
  out.value_log = 6.0 * std::log(2.0) - 0.5 * nn * std::log(nn - 2.0);
  out.threshold_log = -0.5 * nn * std::log(nn);
  out.beats_threshold = out.value_log >= out.threshold_log;
  out.length_sq = nn - 2.0;
  return out;
}

bool verify_maximal_signs(std::size_t d, std::size_t n, SignCheckMode mode) {
  const auto system = family_system(d, n);
  const auto plus = SignAssignment::all_plus(n);
  if (mode == SignCheckMode::exhaustive) {
    const auto best = maximize_signs_exhaustive(system);
    const double plus_len = norm(signed_sum(system, plus));
    return plus_len >= best.length * (1.0 - 1e-12);
  }
  const auto y = bang_certificate(system, plus);
  return std::all_of(y.begin(), y.end(), [](double v) { return v >= 1.0 - 1e-12; });
}

}  // namespace polarc
