#include "polarc/vector_system.hpp"

#include <cmath>
#include <limits>
#include <random>
#include <string>

#include "polarc/error.hpp"

namespace polarc {

namespace {

constexpr double kRenormalizeTol = 1e-9;

void normalize_in_place(Vector& v) {
  const double len = norm(v);
  for (auto& c : v) c /= len;
}

}  // namespace

Scalar inner(std::span<const Scalar> u, std::span<const Scalar> v) {
  Scalar acc{0.0, 0.0};
  for (std::size_t k = 0; k < u.size(); ++k) acc += u[k] * std::conj(v[k]);
  return acc;
}

double norm_sq(std::span<const Scalar> u) {
  double acc = 0.0;
  for (const auto& c : u) acc += std::norm(c);
  return acc;
}

double norm(std::span<const Scalar> u) { return std::sqrt(norm_sq(u)); }

UnitVectorSystem UnitVectorSystem::create(Field field, std::vector<Vector> vectors) {
  if (vectors.empty()) throw Error(Errc::empty_system, "system needs at least one vector");
  const std::size_t dim = vectors.front().size();
  if (dim == 0) throw Error(Errc::dimension_mismatch, "vectors must have positive length");
  for (std::size_t j = 0; j < vectors.size(); ++j) {
    auto& v = vectors[j];
    if (v.size() != dim) {
      throw Error(Errc::dimension_mismatch, "vector " + std::to_string(j) + " has length " +
                                                std::to_string(v.size()) + ", expected " +
                                                std::to_string(dim));
    }
    for (const auto& c : v) {
      if (!std::isfinite(c.real()) || !std::isfinite(c.imag())) {
        throw Error(Errc::not_unit_norm, "vector " + std::to_string(j) + " has non-finite entries");
      }
      if (field == Field::real && c.imag() != 0.0) {
        throw Error(Errc::kind_mismatch,
                    "vector " + std::to_string(j) + " has complex entries in a real system");
      }
    }
    const double len = norm(v);
    if (std::abs(len - 1.0) > kRenormalizeTol) {
      throw Error(Errc::not_unit_norm,
                  "vector " + std::to_string(j) + " has norm " + std::to_string(len));
    }
    // Leave vectors that are already unit to rounding alone, so that
    // re-validating a system (e.g. after serialization) is bit-exact.
    if (std::abs(len - 1.0) > 8.0 * std::numeric_limits<double>::epsilon()) normalize_in_place(v);
  }
  return UnitVectorSystem(field, dim, std::move(vectors));
}

UnitVectorSystem UnitVectorSystem::create_real(const std::vector<std::vector<double>>& vectors) {
  std::vector<Vector> cv;
  cv.reserve(vectors.size());
  for (const auto& v : vectors) cv.emplace_back(v.begin(), v.end());
  return create(Field::real, std::move(cv));
}

UnitVectorSystem UnitVectorSystem::promoted() const {
  return UnitVectorSystem(Field::complex, dim_, vectors_);
}

UnitVectorSystem orthonormal(std::size_t n, Field field) {
  std::vector<Vector> vs(n, Vector(n));
  for (std::size_t j = 0; j < n; ++j) vs[j][j] = 1.0;
  return UnitVectorSystem::create(field, std::move(vs));
}

UnitVectorSystem random_system(Field field, std::size_t n, std::size_t m, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  std::vector<Vector> vs(m, Vector(n));
  for (auto& v : vs) {
    double len = 0.0;
    // A zero draw has probability zero, but resample rather than divide by it.
    while (len == 0.0) {
      for (auto& c : v) {
        const double re = gauss(rng);
        const double im = field == Field::complex ? gauss(rng) : 0.0;
        c = {re, im};
      }
      len = norm(v);
    }
    for (auto& c : v) c /= len;
  }
  return UnitVectorSystem::create(field, std::move(vs));
}

UnitVectorSystem perturbed_orthonormal(std::size_t n, double delta, std::uint64_t seed) {
  if (!(delta >= 0.0)) throw Error(Errc::invalid_params, "delta must be nonnegative");
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::vector<Vector> vs(n, Vector(n));
  for (std::size_t j = 0; j < n; ++j) {
    auto& v = vs[j];
    v[j] = 1.0;
    if (delta == 0.0) continue;
    Vector d(n);
    double len = 0.0;
    while (len == 0.0) {
      for (auto& c : d) c = gauss(rng);
      len = norm(d);
    }
    const double radius = delta * unit(rng);
    for (std::size_t k = 0; k < n; ++k) v[k] += d[k] * (radius / len);
    normalize_in_place(v);
  }
  return UnitVectorSystem::create(Field::real, std::move(vs));
}

GramSummary gram(const UnitVectorSystem& system) {
  const std::size_t m = system.size();
  GramSummary out;
  out.size = m;
  out.gram.assign(m * m, Scalar{});
  out.row_sums.assign(m, 0.0);
  for (std::size_t j = 0; j < m; ++j) {
    out.gram[j * m + j] = 1.0;
    for (std::size_t k = j + 1; k < m; ++k) {
      const Scalar g = inner(system[j], system[k]);
      out.gram[j * m + k] = g;
      out.gram[k * m + j] = std::conj(g);
    }
  }
  for (std::size_t j = 0; j < m; ++j) {
    Scalar s{};
    for (std::size_t k = 0; k < m; ++k) s += out.gram[j * m + k];
    out.row_sums[j] = s.real();
  }
  return out;
}

}  // namespace polarc
