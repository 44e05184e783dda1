#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "polarc/error.hpp"
#include "polarc/vector_system.hpp"

namespace polarc {

enum class SignKind { real_signs, complex_phases };

/// A pattern of +-1 signs or unit-modulus phases, one per system vector.
class SignAssignment {
 public:
  static SignAssignment real(const std::vector<int>& signs);
  static SignAssignment phases(std::vector<Scalar> entries);
  static SignAssignment all_plus(std::size_t m, SignKind kind = SignKind::real_signs);

  SignKind kind() const noexcept { return kind_; }
  std::size_t size() const noexcept { return entries_.size(); }
  const std::vector<Scalar>& entries() const noexcept { return entries_; }
  Scalar operator[](std::size_t j) const { return entries_[j]; }

  /// +-1 per entry; only meaningful for real_signs.
  std::vector<int> signs() const;

  /// Multiply every entry by a global unit factor.
  SignAssignment rotated(Scalar unit) const;

  friend bool operator==(const SignAssignment&, const SignAssignment&) = default;

 private:
  SignAssignment(SignKind kind, std::vector<Scalar> entries)
      : kind_(kind), entries_(std::move(entries)) {}

  SignKind kind_;
  std::vector<Scalar> entries_;
};

/// a_eps = sum_j eps_j a_j.
Vector signed_sum(const UnitVectorSystem& system, const SignAssignment& signs);

/// y_j = Re <a_eps, eps_j a_j>. Not asserted positive.
std::vector<double> bang_certificate(const UnitVectorSystem& system, const SignAssignment& signs);

/// a_eps / |a_eps|; ZeroSum when the signed sum vanishes.
Vector mean_vector(const UnitVectorSystem& system, const SignAssignment& signs);

inline constexpr std::size_t kMaxExhaustiveSize = 24;

struct SignSearchResult {
  SignAssignment signs = SignAssignment::all_plus(0);
  double length = 0.0;
  /// Number of other patterns (first sign fixed to +1) whose length ties
  /// the reported one within tolerance.
  std::size_t ties = 0;
};

/// Global maximizer of |a_eps| over real sign patterns with eps_1 = +1.
/// Ties resolve to the lexicographically smallest pattern, ordering +1
/// before -1. Requires a real system with at most 24 vectors.
SignSearchResult maximize_signs_exhaustive(const UnitVectorSystem& system);

/// Single-flip ascent: scans j = 1..m cyclically and takes the first flip that
/// increases |a_eps|^2, until no flip improves. When no start is given, one is
/// drawn from the seed.
SignAssignment maximize_signs_flip_ascent(const UnitVectorSystem& system,
                                          const std::optional<SignAssignment>& start,
                                          std::uint64_t seed = 0);

struct PhaseSearchResult {
  SignAssignment signs = SignAssignment::all_plus(0);
  double length = 0.0;
  std::size_t cycles = 0;
};

/// Thrown by maximize_phases when the cycle cap is exhausted; carries the
/// best iterate seen.
class PhaseNonConvergence : public Error {
 public:
  explicit PhaseNonConvergence(PhaseSearchResult best);
  const PhaseSearchResult& best() const noexcept { return best_; }

 private:
  PhaseSearchResult best_;
};

/// Cyclic coordinate ascent over unit phases for a complex system, starting
/// from phases drawn from the seed.
PhaseSearchResult maximize_phases(const UnitVectorSystem& system, std::uint64_t seed);

/// Same ascent from an explicit starting pattern.
PhaseSearchResult maximize_phases_from(const UnitVectorSystem& system, const SignAssignment& start);

}  // namespace polarc
