#pragma once

#include <complex>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace polarc {

using Scalar = std::complex<double>;
using Vector = std::vector<Scalar>;

enum class Field { real, complex };

/// Hermitian inner product, linear in the first slot: <u, v> = sum_k u_k * conj(v_k).
/// Every module uses this convention.
Scalar inner(std::span<const Scalar> u, std::span<const Scalar> v);

double norm_sq(std::span<const Scalar> u);
double norm(std::span<const Scalar> u);

/// An ordered system of m unit vectors in K^n.
///
/// Instances are immutable and always valid: every vector has length dim()
/// and Euclidean norm 1 to within 1e-12. Real systems carry zero imaginary
/// parts throughout.
class UnitVectorSystem {
 public:
  /// Validating constructor. Vectors within 1e-9 of unit norm are
  /// renormalized; anything further out is rejected with NotUnitNorm.
  /// Real systems reject entries with nonzero imaginary part (KindMismatch).
  static UnitVectorSystem create(Field field, std::vector<Vector> vectors);
  static UnitVectorSystem create_real(const std::vector<std::vector<double>>& vectors);

  Field field() const noexcept { return field_; }
  bool is_real() const noexcept { return field_ == Field::real; }
  std::size_t dim() const noexcept { return dim_; }
  std::size_t size() const noexcept { return vectors_.size(); }

  const Vector& operator[](std::size_t j) const { return vectors_[j]; }
  const std::vector<Vector>& vectors() const noexcept { return vectors_; }

  /// Same vectors viewed over C (no-op for complex systems).
  UnitVectorSystem promoted() const;

  friend bool operator==(const UnitVectorSystem&, const UnitVectorSystem&) = default;

 private:
  UnitVectorSystem(Field field, std::size_t dim, std::vector<Vector> vectors)
      : field_(field), dim_(dim), vectors_(std::move(vectors)) {}

  Field field_;
  std::size_t dim_;
  std::vector<Vector> vectors_;
};

UnitVectorSystem orthonormal(std::size_t n, Field field = Field::real);

/// m vectors drawn uniformly from the unit sphere of K^n (normalized
/// Gaussian coordinates). Bit-reproducible for a given seed.
UnitVectorSystem random_system(Field field, std::size_t n, std::size_t m, std::uint64_t seed);

/// Real orthonormal basis with each e_j displaced by a random vector of norm
/// at most delta, then renormalized.
UnitVectorSystem perturbed_orthonormal(std::size_t n, double delta, std::uint64_t seed);

struct GramSummary {
  std::size_t size = 0;
  std::vector<Scalar> gram;  // row-major, gram[j*size + k] = <a_j, a_k>
  std::vector<double> row_sums;

  Scalar at(std::size_t j, std::size_t k) const { return gram[j * size + k]; }
};

/// Gram matrix and the unsigned row sums y_j = Re sum_k <a_j, a_k>.
GramSummary gram(const UnitVectorSystem& system);

}  // namespace polarc
