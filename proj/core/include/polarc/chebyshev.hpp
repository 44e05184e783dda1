#pragma once

#include <array>
#include <cstddef>
#include <vector>

#include "polarc/vector_system.hpp"

namespace polarc {

/// Homogeneous real polynomial sum_k coeffs[k] x^{n-k} y^k of degree n.
struct BivariatePoly {
  std::vector<double> coeffs;

  std::size_t degree() const { return coeffs.empty() ? 0 : coeffs.size() - 1; }
  double operator()(double x, double y) const;
  double max_abs_coeff() const;
};

/// Coefficients of Re (x + iy)^n.
BivariatePoly rn_coeffs(std::size_t n);

double rn_eval(std::size_t n, double x, double y);

/// Q with P(x, y) = (-y0 x + x0 y) Q(x, y), given P(x0, y0) = 0. Divides the
/// dehomogenization in whichever variable keeps the root inside [-1, 1].
BivariatePoly factor_out_linear(const BivariatePoly& p, double x0, double y0);

enum class Parity { odd, even };

/// R_n(v) = K prod_j <v, a_j> with unit directions a_j in R^2.
struct Factorization {
  std::size_t n = 0;
  double K = 0.0;
  std::vector<std::array<double, 2>> directions;
  Parity parity = Parity::odd;

  double operator()(double x, double y) const;
};

/// Largest |R_n(v) - K prod <v, a_j>| over `points` seeded points in [-1, 1]^2.
double factorization_residual(const Factorization& f, std::size_t points = 1000,
                              unsigned seed = 0);

/// Closed-form factorization: directions at angles j pi/n (odd n) or
/// (2j+1) pi/(2n) (even n), K = +-2^{n-1}. Validated against the residual
/// bound 1e-9 * 2^n and against K = 1/prod cos(angle_j).
Factorization rn_factorization(std::size_t n);

/// Independent construction: take the zeros of cos(n theta) as root
/// directions, deflate rn_coeffs(n) one linear factor at a time and read K
/// off the remaining constant.
Factorization deflation_factorization(std::size_t n);

/// Direction angles reduced to [0, pi), sorted.
std::vector<double> sorted_angles(const Factorization& f);

/// Pads each direction with zeros to R^{n_dim}.
UnitVectorSystem embed_in_dimension(const Factorization& f, std::size_t n_dim);

/// sup over the real unit circle of |R_n|; always 1, cross-checked against
/// the grid oracle on the product form.
double rn_real_norm(std::size_t n);

}  // namespace polarc
