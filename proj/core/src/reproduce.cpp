#include "polarc/reproduce.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <limits>
#include <random>
#include <sstream>

#include "polarc/chebyshev.hpp"
#include "polarc/counterexamples.hpp"
#include "polarc/error.hpp"
#include "polarc/product_poly.hpp"
#include "polarc/signs.hpp"
#include "polarc/sphere_norm.hpp"

namespace polarc {

namespace {

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

std::uint64_t sub_seed(const ReproduceOptions& opts, std::uint64_t stream, std::uint64_t i) {
  return opts.seed * 0x9E3779B97F4A7C15ull + stream * 1000003ull + i;
}

CriterionResult timed(std::string id, std::string title, double limit,
                      const std::function<bool(std::string&)>& body) {
  CriterionResult r;
  r.id = std::move(id);
  r.title = std::move(title);
  r.limit_seconds = limit;
  const auto t0 = std::chrono::steady_clock::now();
  try {
    r.passed = body(r.detail);
  } catch (const std::exception& e) {
    r.passed = false;
    r.detail = std::string("exception: ") + e.what();
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return r;
}

double min_of(const std::vector<double>& v) { return *std::min_element(v.begin(), v.end()); }

}  // namespace

CriterionResult check_orthonormal_norm(const ReproduceOptions& opts) {
  return timed("AC1", "orthonormal sup-norm equals n^{-n/2}", 10.0, [&](std::string& detail) {
    const double s = opts.tol_scale;
    bool ok = true;
    double worst_rel = 0.0;
    double worst_coord = 0.0;
    for (std::size_t n = 2; n <= 6; ++n) {
      OptimizerOptions o;
      o.seed = sub_seed(opts, 1, n);
      const auto est = norm_real(ProductPolynomial(orthonormal(n)), o);
      const double expected = std::pow(static_cast<double>(n), -0.5 * static_cast<double>(n));
      const double rel = std::abs(est.value - expected) / expected;
      double coord = 0.0;
      for (const auto& w : est.witness) {
        coord = std::max(coord, std::abs(std::abs(w.real()) - 1.0 / std::sqrt(double(n))));
      }
      worst_rel = std::max(worst_rel, rel);
      worst_coord = std::max(worst_coord, coord);
      ok = ok && rel <= 1e-6 * s && coord <= 1e-4 * s;
    }
    detail = "max rel err " + num(worst_rel) + ", max witness coord err " + num(worst_coord);
    return ok;
  });
}

CriterionResult check_low_dimension_mean_vector(const ReproduceOptions& opts) {
  return timed("AC2", "mean-vector bound holds for n <= 5", 30.0, [&](std::string& detail) {
    const double s = opts.tol_scale;
    std::size_t failures = 0;
    double min_gap = std::numeric_limits<double>::infinity();
    constexpr std::size_t kSystems = 10000;
    for (std::size_t i = 0; i < kSystems; ++i) {
      const std::size_t n = 1 + i % 5;
      const auto sys = random_system(Field::real, n, n, sub_seed(opts, 2, i));
      const auto q = pr_question(sys);
      min_gap = std::min(min_gap, q.log_gap);
      if (!(q.log_gap >= -1e-12 * s)) ++failures;
    }
    detail = std::to_string(kSystems) + " systems, " + std::to_string(failures) +
             " failures, min log gap " + num(min_gap);
    return failures == 0;
  });
}

CriterionResult check_near_orthonormal(const ReproduceOptions& opts) {
  return timed("AC3", "near-orthonormal systems satisfy the y-inequality", 30.0,
               [&](std::string& detail) {
                 const double s = opts.tol_scale;
                 std::mt19937_64 rng(sub_seed(opts, 3, 0));
                 std::uniform_real_distribution<double> delta_dist(0.0, 0.2);
                 std::size_t used = 0;
                 std::size_t skipped = 0;
                 std::size_t failures = 0;
                 double min_margin = std::numeric_limits<double>::infinity();
                 for (std::size_t i = 0; i < 1000; ++i) {
                   const std::size_t n = 2 + i % 9;
                   const double delta = delta_dist(rng);
                   const auto sys = perturbed_orthonormal(n, delta, sub_seed(opts, 3, i + 1));
                   const auto c = closeon_check(sys);
                   if (!c.hypothesis_met) {
                     ++skipped;
                     continue;
                   }
                   ++used;
                   double dev = 0.0;
                   for (double y : c.y) dev = std::max(dev, std::abs(y - 1.0));
                   min_margin = std::min(min_margin, c.margin);
                   const bool good = c.margin >= -1e-12 * s && (dev <= 1e-6 || c.margin > 0.0);
                   if (!good) ++failures;
                 }
                 detail = std::to_string(used) + " systems checked (" + std::to_string(skipped) +
                          " outside hypothesis), " + std::to_string(failures) +
                          " failures, min margin " + num(min_margin);
                 return failures == 0 && used > 0;
               });
}

CriterionResult check_counterexample_threshold(const ReproduceOptions& opts) {
  return timed("AC4", "counterexample family threshold n0 = 34", 5.0, [&](std::string& detail) {
    const double s = opts.tol_scale;
    const auto at34 = is_counterexample(6, 34);
    const auto at33 = is_counterexample(6, 33);
    const bool gaps = at34.is_ce && std::abs(at34.log_gap - (-0.00232)) <= 1e-4 * s &&
                      !at33.is_ce && std::abs(at33.log_gap - 0.0812) <= 1e-4 * s;
    const std::size_t n0_six = threshold_n0(6);
    std::size_t best = std::numeric_limits<std::size_t>::max();
    std::string argmin;
    std::string none;
    for (std::size_t d = 2; d <= 20; ++d) {
      std::size_t n0 = 0;
      try {
        n0 = threshold_n0(d);
      } catch (const Error& e) {
        if (e.code() != Errc::not_found_in_range) throw;
        none += (none.empty() ? "" : ",") + std::to_string(d);
        continue;
      }
      if (n0 < best) {
        best = n0;
        argmin = std::to_string(d);
      } else if (n0 == best) {
        argmin += "," + std::to_string(d);
      }
    }
    const std::size_t n0_six_direct = [&] {
      std::size_t n = 7;
      while (!is_counterexample(6, n).is_ce) ++n;
      return n;
    }();
    detail = "gap(6,34)=" + num(at34.log_gap) + " gap(6,33)=" + num(at33.log_gap) +
             " n0(6)=" + std::to_string(n0_six) + " min n0=" + std::to_string(best) +
             " at d={" + argmin + "}, no n0 for d={" + none + "}";
    return gaps && n0_six == 34 && n0_six_direct == 34 && best == 34 &&
           threshold_n0(6) == best;
  });
}

CriterionResult check_alternative_signs(const ReproduceOptions& opts) {
  return timed("AC5", "alternative signs beat the threshold but are not maximal", 1.0,
               [&](std::string& detail) {
                 const double s = opts.tol_scale;
                 std::size_t failures = 0;
                 double worst = 0.0;
                 for (std::size_t n = 7; n <= 100; ++n) {
                   const auto r = alternative_sign_value(n);
                   const auto sys = family_system(6, n);
                   std::vector<int> eps(n, 1);
                   eps[4] = eps[5] = -1;
                   const auto pattern = SignAssignment::real(eps);
                   const double len_sq = norm_sq(signed_sum(sys, pattern));
                   const double plus_sq = norm_sq(signed_sum(sys, SignAssignment::all_plus(n)));
                   const auto direct =
                       ProductPolynomial(sys).evaluate(std::span<const Scalar>(mean_vector(sys, pattern)));
                   const double err = std::abs(direct.log_abs - r.value_log);
                   worst = std::max(worst, std::abs(len_sq - r.length_sq));
                   const bool good = r.beats_threshold &&
                                     std::abs(len_sq - (double(n) - 2.0)) <= 1e-9 * s &&
                                     std::abs(plus_sq - (double(n) + 30.0)) <= 1e-9 * s &&
                                     len_sq < plus_sq && err <= 1e-9 * s;
                   if (!good) ++failures;
                 }
                 detail = "n=7..100, " + std::to_string(failures) +
                          " failures, max |len^2-(n-2)| " + num(worst);
                 return failures == 0;
               });
}

CriterionResult check_bang_certificate(const ReproduceOptions& opts) {
  return timed("AC6", "maximal and flip-local patterns satisfy y_j >= 1", 60.0,
               [&](std::string& detail) {
                 const double s = opts.tol_scale;
                 std::size_t failures = 0;
                 double min_y = std::numeric_limits<double>::infinity();
                 double min_y_exh = std::numeric_limits<double>::infinity();
                 for (std::size_t i = 0; i < 1000; ++i) {
                   const std::size_t n = 1 + i % 12;
                   const auto sys = random_system(Field::real, n, n, sub_seed(opts, 6, i));
                   const auto local = maximize_signs_flip_ascent(sys, std::nullopt, sub_seed(opts, 7, i));
                   const double y = min_of(bang_certificate(sys, local));
                   min_y = std::min(min_y, y);
                   if (!(y >= 1.0 - 1e-9 * s)) ++failures;
                   if (n <= 10) {
                     const auto global = maximize_signs_exhaustive(sys);
                     const double yg = min_of(bang_certificate(sys, global.signs));
                     min_y_exh = std::min(min_y_exh, yg);
                     if (!(yg >= 1.0 - 1e-9 * s)) ++failures;
                     if (global.length < norm(signed_sum(sys, local)) * (1.0 - 1e-12)) ++failures;
                   }
                 }
                 detail = "1000 systems, " + std::to_string(failures) + " failures, min y flip " +
                          num(min_y) + ", min y exhaustive " + num(min_y_exh);
                 return failures == 0;
               });
}

CriterionResult check_factorization(const ReproduceOptions& opts) {
  return timed("AC7", "Re(x+iy)^n factors into n unit linear forms", 10.0,
               [&](std::string& detail) {
                 const double s = opts.tol_scale;
                 std::size_t failures = 0;
                 double worst_res = 0.0;
                 double worst_root = 0.0;
                 double worst_k = 0.0;
                 double worst_angle = 0.0;
                 for (std::size_t n = 1; n <= 20; ++n) {
                   const auto f = rn_factorization(n);
                   const double two_n = std::ldexp(1.0, int(n));
                   const double res = factorization_residual(f, 1000, unsigned(sub_seed(opts, 8, n)));
                   worst_res = std::max(worst_res, res / two_n);
                   if (!(res <= 1e-9 * two_n * s)) ++failures;
                   if (std::abs(f.K) != std::ldexp(1.0, int(n) - 1)) ++failures;
                   for (const auto& a : f.directions) {
                     // root direction (x_j, y_j) = (a_y, -a_x)
                     const double r = std::abs(rn_eval(n, a[1], -a[0]));
                     worst_root = std::max(worst_root, r);
                     if (!(r <= 1e-10 * s)) ++failures;
                   }
                   const auto dfl = deflation_factorization(n);
                   const double k_rel = std::abs(std::abs(dfl.K) - std::abs(f.K)) / std::abs(f.K);
                   worst_k = std::max(worst_k, k_rel);
                   if (!(k_rel <= 1e-9 * s)) ++failures;
                   const auto a1 = sorted_angles(f);
                   const auto a2 = sorted_angles(dfl);
                   for (std::size_t j = 0; j < n; ++j) {
                     const double da = std::abs(a1[j] - a2[j]);
                     worst_angle = std::max(worst_angle, da);
                     if (!(da <= 1e-9 * s)) ++failures;
                   }
                 }
                 detail = "n=1..20, " + std::to_string(failures) + " failures, max residual/2^n " +
                          num(worst_res) + ", max root |R_n| " + num(worst_root) +
                          ", deflation |K| rel " + num(worst_k) + ", angle " + num(worst_angle);
                 return failures == 0;
               });
}

CriterionResult check_complexification(const ReproduceOptions& opts) {
  return timed("AC8", "complexification constant 2^{(n-2)/2} is sharp and never exceeded", 120.0,
               [&](std::string& detail) {
                 const double s = opts.tol_scale;
                 std::size_t failures = 0;
                 std::string ratios;
                 for (std::size_t n = 2; n <= 5; ++n) {
                   OptimizerOptions o;
                   o.seed = sub_seed(opts, 9, n);
                   const auto sys = embed_in_dimension(rn_factorization(n), n);
                   const auto r = ratio_complex_real(ProductPolynomial(sys), o);
                   const double rel = std::abs(r.ratio - r.bound) / r.bound;
                   ratios += (ratios.empty() ? "" : " ") + num(r.ratio);
                   if (!(rel <= 1e-3 * s)) ++failures;
                 }
                 std::size_t violations = 0;
                 double worst = 0.0;
                 for (std::size_t i = 0; i < 1000; ++i) {
                   const std::size_t n = 2 + i % 4;
                   OptimizerOptions o;
                   o.starts = 16;
                   o.seed = sub_seed(opts, 10, i);
                   const auto sys = random_system(Field::real, n, n, sub_seed(opts, 11, i));
                   try {
                     const auto r = ratio_complex_real(ProductPolynomial(sys), o);
                     worst = std::max(worst, r.ratio / r.bound);
                   } catch (const Error& e) {
                     if (e.code() != Errc::bound_violation) throw;
                     ++violations;
                   }
                 }
                 detail = "embedded ratios n=2..5: " + ratios + "; 1000 random systems, " +
                          std::to_string(violations) + " bound violations, max ratio/bound " +
                          num(worst);
                 return failures == 0 && violations == 0;
               });
}

CriterionResult check_analysis_constants(const ReproduceOptions& opts) {
  return timed("AC9", "root of (1+t)^2 = e^t lies in (2.51, 2.52)", 1.0, [&](std::string& detail) {
    const double s = opts.tol_scale;
    const double t0 = expineq_root();
    const double f = (1.0 + t0) * (1.0 + t0) - std::exp(t0);
    detail = "t0=" + num(t0) + " f(t0)=" + num(f);
    return t0 > 2.51 && t0 < 2.52 && std::abs(f) <= 1e-10 * s && t0 > 2.5;
  });
}

CriterionResult check_numerical_hygiene(const ReproduceOptions& opts) {
  return timed("AC10", "gradient, grid-oracle and determinism checks", 60.0,
               [&](std::string& detail) {
                 const double s = opts.tol_scale;
                 std::size_t failures = 0;

                 double worst_grad = 0.0;
                 for (std::size_t i = 0; i < 100; ++i) {
                   const std::size_t n = 2 + i % 5;
                   const auto sys = random_system(Field::real, n, n, sub_seed(opts, 12, i));
                   const ProductPolynomial p(sys);
                   std::mt19937_64 rng(sub_seed(opts, 13, i));
                   std::normal_distribution<double> gauss(0.0, 1.0);
                   for (int attempt = 0;; ++attempt) {
                     std::vector<double> x(n);
                     for (auto& v : x) v = gauss(rng);
                     try {
                       const double err = gradient_check(p, x, 1e-6);
                       worst_grad = std::max(worst_grad, err);
                       if (!(err < 1e-5 * s)) ++failures;
                       break;
                     } catch (const Error& e) {
                       if (e.code() != Errc::too_close_to_zero_set || attempt > 100) throw;
                     }
                   }
                 }

                 std::vector<UnitVectorSystem> grid_systems{orthonormal(2), orthonormal(3),
                                                            embed_in_dimension(rn_factorization(2), 2),
                                                            embed_in_dimension(rn_factorization(3), 3)};
                 for (std::size_t i = 0; i < 6; ++i) {
                   const std::size_t n = 2 + i % 2;
                   grid_systems.push_back(random_system(Field::real, n, n, sub_seed(opts, 14, i)));
                 }
                 double worst_grid = 0.0;
                 for (std::size_t i = 0; i < grid_systems.size(); ++i) {
                   const ProductPolynomial p(grid_systems[i]);
                   OptimizerOptions o;
                   o.seed = sub_seed(opts, 15, i);
                   const auto est = norm_real(p, o);
                   const auto grid = grid_oracle(p, p.dim() == 2 ? 20000 : 600);
                   const double rel = std::abs(est.value - grid.value) / grid.value;
                   worst_grid = std::max(worst_grid, rel);
                   if (!(rel <= 1e-3 * s)) ++failures;
                 }

                 // Same seed, same bits.
                 OptimizerOptions o;
                 o.seed = sub_seed(opts, 16, 0);
                 const ProductPolynomial p(random_system(Field::real, 5, 5, sub_seed(opts, 17, 0)));
                 const auto e1 = norm_real(p, o);
                 const auto e2 = norm_real(p, o);
                 const bool same = e1.value == e2.value && e1.witness == e2.witness &&
                                   e1.iterations_total == e2.iterations_total;
                 if (!same) ++failures;

                 detail = "max gradient err " + num(worst_grad) + ", max grid rel diff " +
                          num(worst_grid) + ", repeat run identical: " + (same ? "yes" : "no");
                 return failures == 0;
               });
}

std::vector<CriterionResult> run_acceptance(const ReproduceOptions& opts) {
  return {check_orthonormal_norm(opts),        check_low_dimension_mean_vector(opts),
          check_near_orthonormal(opts),        check_counterexample_threshold(opts),
          check_alternative_signs(opts),       check_bang_certificate(opts),
          check_factorization(opts),           check_complexification(opts),
          check_analysis_constants(opts),      check_numerical_hygiene(opts)};
}

ExploratorySweep conjecture_sweep(const ReproduceOptions& opts) {
  ExploratorySweep out;
  double min_gap = std::numeric_limits<double>::infinity();
  for (std::size_t n = 2; n <= 6; ++n) {
    const double log_bound = -0.5 * double(n) * std::log(double(n));
    for (std::size_t i = 0; i < 40; ++i) {
      const auto sys = random_system(Field::real, n, n, sub_seed(opts, 20 + n, i));
      OptimizerOptions o;
      o.starts = 16;
      o.seed = sub_seed(opts, 30 + n, i);
      const auto est = norm_real(ProductPolynomial(sys), o);
      ++out.systems;
      const double bound = std::exp(log_bound);
      if (est.value < bound - 1e-9) ++out.below_bound;
      min_gap = std::min(min_gap, est.log_value - log_bound);
    }
  }
  out.detail = std::to_string(out.systems) + " random systems (n=2..6), " +
               std::to_string(out.below_bound) + " estimates below n^{-n/2}, min log margin " +
               num(min_gap);
  return out;
}

std::string format_report(const std::vector<CriterionResult>& results) {
  std::ostringstream os;
  for (const auto& r : results) {
    os << r.id << ' ' << (r.ok() ? "PASS" : "FAIL") << ' ' << r.title << " :: " << r.detail;
    if (!r.within_time()) os << " [over time limit " << num(r.limit_seconds) << " s]";
    os << '\n';
  }
  return os.str();
}

}  // namespace polarc
