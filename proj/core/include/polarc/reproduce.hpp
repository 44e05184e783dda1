#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace polarc {

struct ReproduceOptions {
  std::uint64_t seed = 0;
  /// Multiplies every numeric tolerance; 1 is the published setting.
  double tol_scale = 1.0;
};

struct CriterionResult {
  std::string id;     // "AC1".."AC10"
  std::string title;
  bool passed = false;
  std::string detail;  // deterministic summary, no timings
  double seconds = 0.0;
  double limit_seconds = 0.0;

  bool within_time() const { return seconds < limit_seconds; }
  bool ok() const { return passed && within_time(); }
};

CriterionResult check_orthonormal_norm(const ReproduceOptions& opts);
CriterionResult check_low_dimension_mean_vector(const ReproduceOptions& opts);
CriterionResult check_near_orthonormal(const ReproduceOptions& opts);
CriterionResult check_counterexample_threshold(const ReproduceOptions& opts);
CriterionResult check_alternative_signs(const ReproduceOptions& opts);
CriterionResult check_bang_certificate(const ReproduceOptions& opts);
CriterionResult check_factorization(const ReproduceOptions& opts);
CriterionResult check_complexification(const ReproduceOptions& opts);
CriterionResult check_analysis_constants(const ReproduceOptions& opts);
CriterionResult check_numerical_hygiene(const ReproduceOptions& opts);

std::vector<CriterionResult> run_acceptance(const ReproduceOptions& opts);

struct ExploratorySweep {
  std::size_t systems = 0;
  std::size_t below_bound = 0;  // estimates under n^{-n/2} - 1e-9
  std::string detail;
};

/// Searches random real systems (n <= 6) for a sup-norm estimate below
/// n^{-n/2}. A hit is a research finding, not a failure.
ExploratorySweep conjecture_sweep(const ReproduceOptions& opts);

/// One line per criterion: "<id> PASS|FAIL <title> :: <detail>".
std::string format_report(const std::vector<CriterionResult>& results);

}  // namespace polarc
