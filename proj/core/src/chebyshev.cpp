#include "polarc/chebyshev.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <string>

#include "polarc/error.hpp"
#include "polarc/product_poly.hpp"
#include "polarc/sphere_norm.hpp"

namespace polarc {

namespace {

using std::numbers::pi;

constexpr double kRootTol = 1e-9;
constexpr double kCrossTol = 1e-9;

void require_degree(std::size_t n) {
  if (n == 0) throw Error(Errc::invalid_params, "degree must be at least 1");
}

double reduce_mod_pi(double a) {
  a = std::fmod(a, pi);
  if (a < 0.0) a += pi;
  if (pi - a < 1e-12) a = 0.0;
  return a;
}

}  // namespace

double BivariatePoly::operator()(double x, double y) const {
  if (coeffs.empty()) return 0.0;
  double h = coeffs[0];
  double ypow = 1.0;
  for (std::size_t k = 1; k < coeffs.size(); ++k) {
    ypow *= y;
    h = h * x + coeffs[k] * ypow;
  }
  return h;
}

double BivariatePoly::max_abs_coeff() const {
  double m = 0.0;
  for (double c : coeffs) m = std::max(m, std::abs(c));
  return m;
}

BivariatePoly rn_coeffs(std::size_t n) {
  require_degree(n);
  // Pascal row; exact in double while binomials stay below 2^53.
  std::vector<double> row{1.0};
  for (std::size_t i = 1; i <= n; ++i) {
    std::vector<double> next(i + 1, 1.0);
    for (std::size_t k = 1; k < i; ++k) next[k] = row[k - 1] + row[k];
    row = std::move(next);
  }
  BivariatePoly p;
  p.coeffs.assign(n + 1, 0.0);
  for (std::size_t k = 0; k <= n; k += 2) p.coeffs[k] = (k / 2) % 2 == 0 ? row[k] : -row[k];
  return p;
}

double rn_eval(std::size_t n, double x, double y) { return rn_coeffs(n)(x, y); }

BivariatePoly factor_out_linear(const BivariatePoly& p, double x0, double y0) {
  if (x0 == 0.0 && y0 == 0.0) throw Error(Errc::zero_direction, "root direction is (0, 0)");
  const std::size_t n = p.degree();
  if (n == 0) throw Error(Errc::not_a_root, "a constant has no linear factor");
  const double scale = p.max_abs_coeff() * std::pow(std::abs(x0) + std::abs(y0), n);
  const double at_root = p(x0, y0);
  if (std::abs(at_root) > kRootTol * scale) {
    throw Error(Errc::not_a_root, "P(x0, y0) = " + std::to_string(at_root));
  }

  const auto& c = p.coeffs;
  BivariatePoly q;
  q.coeffs.assign(n, 0.0);
  if (std::abs(x0) >= std::abs(y0)) {
    // p(t) = P(1, t) = sum c_k t^k = (t - y0/x0) q(t); Q = x^{n-1} q(y/x) / x0.
    const double r = y0 / x0;
    std::vector<double> b(n);
    b[n - 1] = c[n];
    for (std::size_t k = n - 1; k >= 1; --k) b[k - 1] = c[k] + r * b[k];
    for (std::size_t k = 0; k < n; ++k) q.coeffs[k] = b[k] / x0;
  } else {
    // p(s) = P(s, 1) = sum c_{n-i} s^i = (s - x0/y0) q(s); Q = -y^{n-1} q(x/y) / y0.
    const double s0 = x0 / y0;
    std::vector<double> d(n);
    d[n - 1] = c[0];
    for (std::size_t i = n - 1; i >= 1; --i) d[i - 1] = c[n - i] + s0 * d[i];
    for (std::size_t k = 0; k < n; ++k) q.coeffs[k] = -d[n - 1 - k] / y0;
  }
  return q;
}

double Factorization::operator()(double x, double y) const {
  double prod = K;
  for (const auto& a : directions) prod *= x * a[0] + y * a[1];
  return prod;
}

double factorization_residual(const Factorization& f, std::size_t points, unsigned seed) {
  const auto r = rn_coeffs(f.n);
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> coord(-1.0, 1.0);
  double worst = 0.0;
  for (std::size_t i = 0; i < points; ++i) {
    const double x = coord(rng);
    const double y = coord(rng);
    worst = std::max(worst, std::abs(r(x, y) - f(x, y)));
  }
  return worst;
}

Factorization rn_factorization(std::size_t n) {
  require_degree(n);
  Factorization f;
  f.n = n;
  f.parity = n % 2 == 1 ? Parity::odd : Parity::even;
  const double dn = static_cast<double>(n);
  double cos_prod = 1.0;
  for (std::size_t j = 0; j < n; ++j) {
    const double dj = static_cast<double>(j);
    const double angle = f.parity == Parity::odd ? dj * pi / dn : (2.0 * dj + 1.0) * pi / (2.0 * dn);
    f.directions.push_back({std::cos(angle), std::sin(angle)});
    cos_prod *= std::cos(angle);
  }
  const std::size_t half = f.parity == Parity::odd ? (n - 1) / 2 : n / 2;
  f.K = (half % 2 == 0 ? 1.0 : -1.0) * std::ldexp(1.0, static_cast<int>(n) - 1);

  if (std::abs(f.K * cos_prod - 1.0) > kCrossTol) {
    throw Error(Errc::residual_too_large,
                "K disagrees with 1/prod cos(angle_j) for n=" + std::to_string(n));
  }
  const double residual = factorization_residual(f);
  if (residual > 1e-9 * std::ldexp(1.0, static_cast<int>(n))) {
    throw Error(Errc::residual_too_large, "factorization residual " + std::to_string(residual) +
                                              " for n=" + std::to_string(n));
  }
  return f;
}

Factorization deflation_factorization(std::size_t n) {
  require_degree(n);
  Factorization f;
  f.n = n;
  f.parity = n % 2 == 1 ? Parity::odd : Parity::even;
  BivariatePoly p = rn_coeffs(n);
  const double dn = static_cast<double>(n);
  for (std::size_t k = 0; k < n; ++k) {
    // R_n(cos phi, sin phi) = cos(n phi) vanishes at phi = (2k+1) pi / (2n).
    const double phi = (2.0 * static_cast<double>(k) + 1.0) * pi / (2.0 * dn);
    const double x0 = std::cos(phi);
    const double y0 = std::sin(phi);
    p = factor_out_linear(p, x0, y0);
    // The removed factor is -y0 x + x0 y = <v, (-y0, x0)>.
    f.directions.push_back({-y0, x0});
  }
  f.K = p.coeffs.at(0);
  // Report directions in the closed upper half plane, absorbing signs into K.
  for (auto& a : f.directions) {
    if (a[1] < 0.0 || (std::abs(a[1]) < 1e-12 && a[0] < 0.0)) {
      a = {-a[0], -a[1]};
      f.K = -f.K;
    }
  }
  return f;
}

std::vector<double> sorted_angles(const Factorization& f) {
  std::vector<double> out;
  out.reserve(f.directions.size());
  for (const auto& a : f.directions) out.push_back(reduce_mod_pi(std::atan2(a[1], a[0])));
  std::sort(out.begin(), out.end());
  return out;
}

UnitVectorSystem embed_in_dimension(const Factorization& f, std::size_t n_dim) {
  if (n_dim < 2) throw Error(Errc::invalid_dimension, "embedding dimension must be at least 2");
  std::vector<std::vector<double>> vs;
  vs.reserve(f.directions.size());
  for (const auto& a : f.directions) {
    std::vector<double> v(n_dim, 0.0);
    v[0] = a[0];
    v[1] = a[1];
    vs.push_back(std::move(v));
  }
  return UnitVectorSystem::create_real(vs);
}

double rn_real_norm(std::size_t n) {
  require_degree(n);
  // max |cos(n theta)| = 1, attained at theta = 0.
  constexpr double value = 1.0;
  const auto f = rn_factorization(n);
  const ProductPolynomial p(embed_in_dimension(f, 2));
  const auto grid = grid_oracle(p, 12000 * n);
  const double product_form = grid.value * std::abs(f.K);
  if (std::abs(product_form - value) > 1e-8) {
    throw Error(Errc::cross_check_failure,
                "grid maximum of the product form is " + std::to_string(product_form));
  }
  return value;
}

}  // namespace polarc
