#include "polarc/sphere_norm.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <random>
#include <string>

#include "polarc/error.hpp"

namespace polarc {

namespace {

constexpr double kZeroSetGuard = 1e-13;
constexpr double kPerturbSize = 1e-6;
constexpr double kMinStep = 1e-16;

struct Objective {
  const UnitVectorSystem& system;
  bool complex;

  double value(const Vector& z) const {
    double f = 0.0;
    for (std::size_t j = 0; j < system.size(); ++j) {
      const double mag = std::abs(inner(z, system[j]));
      if (mag == 0.0) return -std::numeric_limits<double>::infinity();
      f += std::log(mag);
    }
    return f;
  }

  double min_factor(const Vector& z) const {
    double lo = std::numeric_limits<double>::infinity();
    for (std::size_t j = 0; j < system.size(); ++j) lo = std::min(lo, std::abs(inner(z, system[j])));
    return lo;
  }

  // Euclidean gradient on R^n or R^{2n}, packed as complex entries
  // (d/d Re z_k) + i (d/d Im z_k) = sum_j a_jk / conj(<z, a_j>).
  Vector gradient(const Vector& z) const {
    Vector g(z.size());
    for (std::size_t j = 0; j < system.size(); ++j) {
      const Scalar c = std::conj(inner(z, system[j]));
      const auto& a = system[j];
      for (std::size_t k = 0; k < g.size(); ++k) g[k] += a[k] / c;
    }
    if (!complex) {
      for (auto& v : g) v = v.real();
    }
    return g;
  }
};

// Real inner product on the realified space.
double real_dot(const Vector& u, const Vector& v) { return inner(u, v).real(); }

void project_tangent(Vector& g, const Vector& z) {
  const double c = real_dot(g, z);
  for (std::size_t k = 0; k < g.size(); ++k) g[k] -= c * z[k];
}

void normalize(Vector& z) {
  const double len = norm(z);
  for (auto& v : z) v /= len;
}

Vector random_unit(std::size_t n, bool complex, std::mt19937_64& rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  Vector z(n);
  double len = 0.0;
  while (len == 0.0) {
    for (auto& v : z) v = {gauss(rng), complex ? gauss(rng) : 0.0};
    len = norm(z);
  }
  for (auto& v : z) v /= len;
  return z;
}

void perturb_off_zero_set(Vector& z, const Objective& obj, std::mt19937_64& rng) {
  for (int attempt = 0; attempt < 100 && obj.min_factor(z) < kZeroSetGuard; ++attempt) {
    Vector d = random_unit(z.size(), obj.complex, rng);
    project_tangent(d, z);
    const double len = norm(d);
    if (len == 0.0) continue;
    for (std::size_t k = 0; k < z.size(); ++k) z[k] += d[k] * (kPerturbSize / len);
    normalize(z);
  }
}

struct StartResult {
  Vector z;
  double f = -std::numeric_limits<double>::infinity();
  std::size_t iterations = 0;
  bool converged = false;
};

StartResult ascend(const Objective& obj, Vector z, const OptimizerOptions& opts, std::size_t start,
                   std::mt19937_64& rng) {
  perturb_off_zero_set(z, obj, rng);
  StartResult out;
  double f = obj.value(z);
  double traced = f;
  if (opts.trace) opts.trace(start, 0, f);
  double step = opts.step;
  for (std::size_t it = 0; it < opts.max_iters; ++it) {
    ++out.iterations;
    Vector g = obj.gradient(z);
    project_tangent(g, z);
    const double gnorm = norm(g);
    if (gnorm <= opts.tol) {
      out.converged = true;
      break;
    }
    bool accepted = false;
    // Near a maximizer the gain step*|g|^2 drops below the resolution of f.
    // There a step that leaves f flat but shrinks |g| still counts.
    const double flat = 4.0 * std::numeric_limits<double>::epsilon() * std::max(1.0, std::abs(f));
    while (step >= kMinStep) {
      Vector trial = z;
      for (std::size_t k = 0; k < z.size(); ++k) trial[k] += step * g[k];
      normalize(trial);
      const double ft = obj.value(trial);
      bool take = ft > f;
      if (!take && ft >= f - flat) {
        Vector gt = obj.gradient(trial);
        project_tangent(gt, trial);
        take = norm(gt) < gnorm;
      }
      if (take) {
        z = std::move(trial);
        f = ft;
        accepted = true;
        step = opts.step;
        break;
      }
      step *= 0.5;
    }
    if (opts.trace && accepted && f > traced) {
      traced = f;
      opts.trace(start, it + 1, f);
    }
    if (!accepted) {
      // No representable improvement left along the gradient.
      out.converged = gnorm <= 1e-6;
      break;
    }
  }
  out.z = std::move(z);
  out.f = f;
  return out;
}

void check_options(const OptimizerOptions& opts) {
  if (opts.starts == 0 || opts.max_iters == 0 || !(opts.step > 0.0) || !(opts.tol > 0.0)) {
    throw Error(Errc::invalid_params, "optimizer options must be positive");
  }
}

NormEstimate multistart(const UnitVectorSystem& system, bool complex, const OptimizerOptions& opts) {
  check_options(opts);
  const Objective obj{system, complex};
  NormEstimate best;
  best.log_value = -std::numeric_limits<double>::infinity();
  best.starts = opts.starts;
  for (std::size_t s = 0; s < opts.starts; ++s) {
    std::seed_seq seq{static_cast<std::uint32_t>(opts.seed & 0xFFFFFFFFu),
                      static_cast<std::uint32_t>(opts.seed >> 32), static_cast<std::uint32_t>(s),
                      complex ? 1u : 0u};
    std::mt19937_64 rng(seq);
    const auto res = ascend(obj, random_unit(system.dim(), complex, rng), opts, s, rng);
    best.iterations_total += res.iterations;
    if (res.converged) ++best.converged_starts;
    if (res.f > best.log_value) {
      best.log_value = res.f;
      best.witness = res.z;
      best.best_start = s;
    }
  }
  // Report the value as re-evaluated at the witness.
  const auto pv = ProductPolynomial(system).evaluate(best.witness);
  best.log_value = pv.log_abs;
  best.value = pv.abs();
  return best;
}

double lipschitz_bound(const ProductPolynomial& p) { return static_cast<double>(p.degree()); }

}  // namespace

NormEstimate norm_real(const ProductPolynomial& p, const OptimizerOptions& opts) {
  if (!p.system().is_real()) throw Error(Errc::kind_mismatch, "real sphere norm needs a real system");
  return multistart(p.system(), false, opts);
}

NormEstimate norm_complex(const ProductPolynomial& p, const OptimizerOptions& opts) {
  return multistart(p.system().promoted(), true, opts);
}

NormEstimate grid_oracle(const ProductPolynomial& p, std::size_t resolution) {
  if (!p.system().is_real()) throw Error(Errc::kind_mismatch, "grid oracle needs a real system");
  const std::size_t n = p.dim();
  if (n > 3) throw Error(Errc::too_high_dimensional, "grid oracle supports dimension <= 3");
  if (resolution < 2) throw Error(Errc::invalid_params, "resolution must be at least 2");

  NormEstimate out;
  out.starts = 1;
  out.converged_starts = 1;
  out.log_value = -std::numeric_limits<double>::infinity();
  auto consider = [&](std::vector<double> x) {
    ++out.iterations_total;
    const auto v = p.evaluate(x);
    if (!v.zero && v.log_abs > out.log_value) {
      out.log_value = v.log_abs;
      out.witness.assign(x.begin(), x.end());
    }
  };

  using std::numbers::pi;
  if (n == 1) {
    consider({1.0});
  } else if (n == 2) {
    // |P(-x)| = |P(x)|, so a half circle covers the sphere.
    for (std::size_t k = 0; k < resolution; ++k) {
      const double t = pi * static_cast<double>(k) / static_cast<double>(resolution);
      consider({std::cos(t), std::sin(t)});
    }
  } else {
    for (std::size_t i = 0; i < resolution; ++i) {
      const double theta = pi * static_cast<double>(i) / static_cast<double>(resolution - 1);
      const double st = std::sin(theta);
      const double ct = std::cos(theta);
      for (std::size_t k = 0; k < resolution; ++k) {
        const double phi = 2.0 * pi * static_cast<double>(k) / static_cast<double>(resolution);
        consider({st * std::cos(phi), st * std::sin(phi), ct});
      }
    }
  }
  if (out.witness.empty()) {
    out.log_value = -std::numeric_limits<double>::infinity();
    out.value = 0.0;
    out.witness = Vector(n);
    out.witness[0] = 1.0;
  } else {
    out.value = std::exp(out.log_value);
  }
  return out;
}

double grid_error_bound(const ProductPolynomial& p, std::size_t resolution) {
  using std::numbers::pi;
  const double r = static_cast<double>(resolution);
  double dist = 0.0;
  if (p.dim() == 2) dist = pi / (2.0 * r);
  if (p.dim() == 3) dist = 0.5 * (pi / (r - 1.0) + 2.0 * pi / r);
  return lipschitz_bound(p) * dist;
}

RatioReport ratio_complex_real(const ProductPolynomial& p, const OptimizerOptions& opts) {
  if (!p.system().is_real()) throw Error(Errc::kind_mismatch, "ratio needs a real system");
  if (p.degree() < 2) throw Error(Errc::invalid_params, "ratio bound needs degree >= 2");
  RatioReport out;
  out.real = norm_real(p, opts);
  out.complex = norm_complex(p, opts);
  out.ratio = std::exp(out.complex.log_value - out.real.log_value);
  out.bound = std::pow(2.0, 0.5 * (static_cast<double>(p.degree()) - 2.0));
  if (out.ratio > out.bound * (1.0 + 1e-6)) {
    throw Error(Errc::bound_violation, "complex/real ratio " + std::to_string(out.ratio) +
                                           " exceeds " + std::to_string(out.bound));
  }
  return out;
}

double projected_gradient_norm(const ProductPolynomial& p, std::span<const Scalar> z, Field field) {
  const bool complex = field == Field::complex;
  const auto system = complex ? p.system().promoted() : p.system();
  const Objective obj{system, complex};
  const Vector x(z.begin(), z.end());
  Vector g = obj.gradient(x);
  project_tangent(g, x);
  return norm(g);
}

double gradient_check(const ProductPolynomial& p, std::span<const double> x_in, double h) {
  if (!p.system().is_real()) throw Error(Errc::kind_mismatch, "gradient check needs a real system");
  const std::size_t n = p.dim();
  if (x_in.size() != n) throw Error(Errc::dimension_mismatch, "point dimension mismatch");
  Vector x(x_in.begin(), x_in.end());
  normalize(x);
  const Objective obj{p.system(), false};
  if (obj.min_factor(x) <= 10.0 * h) {
    throw Error(Errc::too_close_to_zero_set, "a factor is within 10h of zero at the point");
  }
  Vector g = obj.gradient(x);
  project_tangent(g, x);

  // Orthonormal tangent frame by Gram-Schmidt on the canonical basis.
  std::vector<Vector> frame;
  for (std::size_t k = 0; k < n && frame.size() + 1 < n; ++k) {
    Vector e(n);
    e[k] = 1.0;
    project_tangent(e, x);
    for (const auto& f : frame) {
      const double c = real_dot(e, f);
      for (std::size_t i = 0; i < n; ++i) e[i] -= c * f[i];
    }
    const double len = norm(e);
    if (len < 1e-8) continue;
    for (auto& v : e) v /= len;
    frame.push_back(std::move(e));
  }

  double scale = 1.0;
  for (const auto& v : g) scale = std::max(scale, std::abs(v));
  double worst = 0.0;
  for (const auto& t : frame) {
    Vector plus = x;
    Vector minus = x;
    for (std::size_t i = 0; i < n; ++i) {
      plus[i] += h * t[i];
      minus[i] -= h * t[i];
    }
    normalize(plus);
    normalize(minus);
    const double fd = (obj.value(plus) - obj.value(minus)) / (2.0 * h);
    const double analytic = real_dot(g, t);
    worst = std::max(worst, std::abs(fd - analytic) / scale);
  }
  return worst;
}

}  // namespace polarc
