#pragma once

#include <cstddef>

#include "polarc/vector_system.hpp"

namespace polarc {

// The family (d, n): d copies of b = (1/sqrt d, ..., 1/sqrt d, 0, ..., 0)
// followed by e_{d+1}, ..., e_n. Its all-plus signed sum d*b + sum e_j has
// maximal length, and the mean vector attains d^d / (n + d^2 - d)^{n/2}.

UnitVectorSystem family_system(std::size_t d, std::size_t n);

/// d ln d - (n/2) ln(n + d^2 - d).
double family_value_log(std::size_t d, std::size_t n);

struct CounterexampleCheck {
  bool is_ce = false;
  double log_gap = 0.0;  // family_value_log + (n/2) ln n
};

CounterexampleCheck is_counterexample(std::size_t d, std::size_t n);

/// Smallest n0 > d such that the family is a counterexample for every n in
/// [n0, 10 d^2 + 100]. NotFoundInRange if the cap itself is not one.
std::size_t threshold_n0(std::size_t d);

inline std::size_t threshold_scan_cap(std::size_t d) { return 10 * d * d + 100; }

struct AlternativeSignValue {
  double value_log = 0.0;      // 6 ln 2 - (n/2) ln(n - 2)
  double threshold_log = 0.0;  // -(n/2) ln n
  bool beats_threshold = false;
  double length_sq = 0.0;  // n - 2
};

/// The d = 6 family under signs (+,+,+,+,-,-,+,...,+).
AlternativeSignValue alternative_sign_value(std::size_t n);

enum class SignCheckMode { exhaustive, flip_local };

/// Confirms the all-plus pattern is a global maximizer (exhaustive, n <= 24)
/// or satisfies the flip-local certificate.
bool verify_maximal_signs(std::size_t d, std::size_t n, SignCheckMode mode);

}  // namespace polarc
