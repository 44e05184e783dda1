#include "polarc/signs.hpp"

#include <bit>
#include <cmath>
#include <numbers>
#include <random>
#include <string>

namespace polarc {

namespace {

constexpr double kUnitModulusTol = 1e-12;
// A flip must gain more than this in |a_eps|^2 to be taken; keeps ascent
// finite under rounding.
constexpr double kFlipGainTol = 1e-12;
constexpr double kPhaseImprovementTol = 1e-12;
constexpr double kPhaseImagTol = 1e-11;

void require_compatible(const UnitVectorSystem& system, const SignAssignment& signs) {
  if (signs.size() != system.size()) {
    throw Error(Errc::dimension_mismatch, "pattern has " + std::to_string(signs.size()) +
                                              " entries for " + std::to_string(system.size()) +
                                              " vectors");
  }
  if (system.is_real() && signs.kind() == SignKind::complex_phases) {
    throw Error(Errc::kind_mismatch, "complex phases applied to a real system");
  }
}

void require_real(const UnitVectorSystem& system, const char* op) {
  if (!system.is_real()) throw Error(Errc::kind_mismatch, std::string(op) + " needs a real system");
}

std::vector<double> real_gram(const UnitVectorSystem& system) {
  const auto g = gram(system);
  std::vector<double> out(g.gram.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = g.gram[i].real();
  return out;
}

// r_k = sum_l eps_l G_kl
void signed_row_sums(const std::vector<double>& g, const std::vector<int>& eps,
                     std::vector<double>& r) {
  const std::size_t m = eps.size();
  r.assign(m, 0.0);
  for (std::size_t k = 0; k < m; ++k) {
    double s = 0.0;
    for (std::size_t l = 0; l < m; ++l) s += eps[l] * g[k * m + l];
    r[k] = s;
  }
}

}  // namespace

SignAssignment SignAssignment::real(const std::vector<int>& signs) {
  std::vector<Scalar> entries;
  entries.reserve(signs.size());
  for (int s : signs) {
    if (s != 1 && s != -1) throw Error(Errc::invalid_params, "real signs must be +1 or -1");
    entries.emplace_back(static_cast<double>(s), 0.0);
  }
  return SignAssignment(SignKind::real_signs, std::move(entries));
}

SignAssignment SignAssignment::phases(std::vector<Scalar> entries) {
  for (const auto& e : entries) {
    if (!(std::abs(std::abs(e) - 1.0) <= kUnitModulusTol)) {
      throw Error(Errc::invalid_params, "phase entries must have modulus 1");
    }
  }
  return SignAssignment(SignKind::complex_phases, std::move(entries));
}

SignAssignment SignAssignment::all_plus(std::size_t m, SignKind kind) {
  return SignAssignment(kind, std::vector<Scalar>(m, Scalar{1.0, 0.0}));
}

std::vector<int> SignAssignment::signs() const {
  std::vector<int> out;
  out.reserve(entries_.size());
  for (const auto& e : entries_) out.push_back(e.real() < 0.0 ? -1 : 1);
  return out;
}

SignAssignment SignAssignment::rotated(Scalar unit) const {
  auto entries = entries_;
  for (auto& e : entries) e *= unit;
  if (kind_ == SignKind::real_signs) {
    if (unit.imag() != 0.0 || std::abs(std::abs(unit.real()) - 1.0) != 0.0) {
      return phases(std::move(entries));
    }
  }
  return SignAssignment(kind_, std::move(entries));
}

Vector signed_sum(const UnitVectorSystem& system, const SignAssignment& signs) {
  require_compatible(system, signs);
  Vector out(system.dim());
  for (std::size_t j = 0; j < system.size(); ++j) {
    const auto& a = system[j];
    for (std::size_t k = 0; k < out.size(); ++k) out[k] += signs[j] * a[k];
  }
  return out;
}

std::vector<double> bang_certificate(const UnitVectorSystem& system, const SignAssignment& signs) {
  const Vector s = signed_sum(system, signs);
  std::vector<double> y(system.size());
  for (std::size_t j = 0; j < system.size(); ++j) {
    // <s, eps_j a_j> = conj(eps_j) <s, a_j>
    y[j] = (std::conj(signs[j]) * inner(s, system[j])).real();
  }
  return y;
}

Vector mean_vector(const UnitVectorSystem& system, const SignAssignment& signs) {
  Vector s = signed_sum(system, signs);
  const double len = norm(s);
  if (len <= 1e-14 * static_cast<double>(system.size())) {
    throw Error(Errc::zero_sum, "signed sum vanishes; mean vector undefined");
  }
  for (auto& c : s) c /= len;
  return s;
}

SignSearchResult maximize_signs_exhaustive(const UnitVectorSystem& system) {
  require_real(system, "exhaustive sign search");
  const std::size_t m = system.size();
  if (m > kMaxExhaustiveSize) {
    throw Error(Errc::too_large, std::to_string(m) + " vectors exceeds the exhaustive limit of " +
                                     std::to_string(kMaxExhaustiveSize));
  }
  const auto g = real_gram(system);

  std::vector<int> eps(m, 1);
  std::vector<double> r;
  signed_row_sums(g, eps, r);
  double len_sq = 0.0;
  for (std::size_t k = 0; k < m; ++k) len_sq += r[k];

  // key orders patterns lexicographically: entry 0 is the most significant
  // bit, and a set bit means -1.
  auto bit_of = [m](std::size_t j) { return std::uint32_t{1} << (m - 1 - j); };
  std::uint32_t key = 0;
  std::uint32_t best_key = 0;
  double best = len_sq;
  std::size_t ties = 0;

  const std::uint64_t count = std::uint64_t{1} << (m - 1);
  for (std::uint64_t step = 1; step < count; ++step) {
    // Gray code: flip position 1 + ctz(step); position 0 stays +1.
    const std::size_t j = 1 + static_cast<std::size_t>(std::countr_zero(step));
    const double old = eps[j];
    len_sq += 4.0 - 4.0 * old * r[j];
    for (std::size_t k = 0; k < m; ++k) r[k] -= 2.0 * old * g[k * m + j];
    eps[j] = -eps[j];
    key ^= bit_of(j);

    if ((step & 0xFFFF) == 0) {
      signed_row_sums(g, eps, r);
      len_sq = 0.0;
      for (std::size_t k = 0; k < m; ++k) len_sq += eps[k] * r[k];
    }

    const double tol = 1e-10 * std::max(1.0, best);
    if (len_sq > best + tol) {
      best = len_sq;
      best_key = key;
      ties = 0;
    } else if (len_sq >= best - tol) {
      ++ties;
      if (key < best_key) {
        best_key = key;
        best = std::max(best, len_sq);
      }
    }
  }

  std::vector<int> best_eps(m, 1);
  for (std::size_t j = 0; j < m; ++j) {
    if (best_key & bit_of(j)) best_eps[j] = -1;
  }
  auto signs = SignAssignment::real(best_eps);
  const double length = norm(signed_sum(system, signs));
  return {std::move(signs), length, ties};
}

SignAssignment maximize_signs_flip_ascent(const UnitVectorSystem& system,
                                          const std::optional<SignAssignment>& start,
                                          std::uint64_t seed) {
  require_real(system, "flip ascent");
  const std::size_t m = system.size();
  std::vector<int> eps;
  if (start) {
    require_compatible(system, *start);
    eps = start->signs();
  } else {
    std::mt19937_64 rng(seed);
    std::bernoulli_distribution coin(0.5);
    eps.resize(m);
    for (auto& e : eps) e = coin(rng) ? 1 : -1;
  }
  const auto g = real_gram(system);
  std::vector<double> r;
  signed_row_sums(g, eps, r);

  bool flipped_any = true;
  while (flipped_any) {
    flipped_any = false;
    std::size_t since_flip = 0;
    std::size_t j = 0;
    while (since_flip < m) {
      // |a_eps'|^2 - |a_eps|^2 = 4 (1 - eps_j r_j)
      if (4.0 * (1.0 - eps[j] * r[j]) > kFlipGainTol) {
        const double old = eps[j];
        for (std::size_t k = 0; k < m; ++k) r[k] -= 2.0 * old * g[k * m + j];
        eps[j] = -eps[j];
        since_flip = 0;
        flipped_any = true;
      } else {
        ++since_flip;
      }
      j = (j + 1) % m;
    }
    // Refresh the running sums and re-verify before declaring a local max.
    signed_row_sums(g, eps, r);
    for (std::size_t k = 0; k < m && !flipped_any; ++k) {
      if (4.0 * (1.0 - eps[k] * r[k]) > kFlipGainTol) flipped_any = true;
    }
  }
  return SignAssignment::real(eps);
}

PhaseNonConvergence::PhaseNonConvergence(PhaseSearchResult best)
    : Error(Errc::non_convergence,
            "phase ascent hit the cycle cap after " + std::to_string(best.cycles) + " cycles"),
      best_(std::move(best)) {}

PhaseSearchResult maximize_phases(const UnitVectorSystem& system, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> angle(0.0, 2.0 * std::numbers::pi);
  std::vector<Scalar> start(system.size());
  for (auto& e : start) e = std::polar(1.0, angle(rng));
  return maximize_phases_from(system, SignAssignment::phases(std::move(start)));
}

PhaseSearchResult maximize_phases_from(const UnitVectorSystem& system,
                                       const SignAssignment& start) {
  if (system.is_real()) throw Error(Errc::kind_mismatch, "phase ascent needs a complex system");
  if (start.size() != system.size()) {
    throw Error(Errc::dimension_mismatch, "start pattern size does not match the system");
  }
  const std::size_t m = system.size();
  const auto g = gram(system);
  std::vector<Scalar> eps = start.entries();
  std::vector<Scalar> w(m);  // w_j = <a_eps, a_j> = sum_k eps_k G_kj

  auto refresh = [&] {
    for (std::size_t j = 0; j < m; ++j) {
      Scalar s{};
      for (std::size_t k = 0; k < m; ++k) s += eps[k] * g.at(k, j);
      w[j] = s;
    }
  };
  auto length_sq = [&] {
    double s = 0.0;
    for (std::size_t j = 0; j < m; ++j) s += (std::conj(eps[j]) * w[j]).real();
    return s;
  };

  const auto cap = static_cast<std::size_t>(
      std::ceil(10.0 * static_cast<double>(m) * std::log(1.0 / 1e-12)));
  refresh();
  double current = length_sq();
  std::size_t cycles = 0;
  while (true) {
    for (std::size_t j = 0; j < m; ++j) {
      const Scalar c = w[j] - eps[j];  // <u, a_j> with u = a_eps - eps_j a_j
      const double mag = std::abs(c);
      const Scalar next = mag > 0.0 ? c / mag : Scalar{1.0, 0.0};
      const Scalar delta = next - eps[j];
      if (delta == Scalar{}) continue;
      for (std::size_t l = 0; l < m; ++l) w[l] += delta * g.at(j, l);
      eps[j] = next;
    }
    ++cycles;
    refresh();
    const double updated = length_sq();
    double worst_imag = 0.0;
    for (std::size_t j = 0; j < m; ++j) {
      worst_imag = std::max(worst_imag, std::abs((std::conj(eps[j]) * w[j]).imag()));
    }
    const bool settled = updated - current < kPhaseImprovementTol && worst_imag <= kPhaseImagTol;
    current = std::max(current, updated);
    if (settled) break;
    if (cycles >= cap) {
      throw PhaseNonConvergence({SignAssignment::phases(eps), std::sqrt(current), cycles});
    }
  }
  return {SignAssignment::phases(std::move(eps)), std::sqrt(current), cycles};
}

}  // namespace polarc
