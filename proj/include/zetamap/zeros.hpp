#pragma once

#include <cstdint>
#include <vector>

namespace zetamap {

enum class ZeroMethod { closed_form_estimate, damped_map, reference_table };

// One computed (or ingested) zero of zeta on the critical line.
struct ZeroEstimate {
  std::int64_t n = 0;  // 1-based zero index
  double t = 0.0;      // imaginary part of the zero
  ZeroMethod method = ZeroMethod::closed_form_estimate;
  double delta = 0.0;  // map damping; 0 for estimator and reference rows
  int iterations = 0;
  bool converged = false;
  double final_step = 0.0;  // |t_k - t_{k-1}| of the last step taken
};

// Closed-form estimate t_hat_n = 2 pi (n - 11/8) / W0((n - 11/8)/e).
ZeroEstimate estimate_zero(std::int64_t n);
double estimate_zero_value(std::int64_t n);

// One application of the damped map: the estimator with the index shifted by
// (delta/pi) arg zeta(1/2 + i t_prev). Throws MapDomainError when the shifted
// index falls below the W0 branch point.
double map_step(std::int64_t n, double t_prev, double delta);

// Full iterate sequence t0, t1, ..., t_{k_iters}. Throws MapDomainError with
// the failing iterate index when the orbit escapes the Lambert domain.
std::vector<double> iterate_map(std::int64_t n, double delta, int k_iters, double t0);

// Runs the map from t0, stopping early once a step falls at or below
// step_tol. Escapes from the Lambert domain become converged = false rows
// rather than errors so that sweeps over unstable regimes stay data.
ZeroEstimate solve_zero(std::int64_t n, double delta, int k_iters = 20,
                        double t0 = 1.0, double step_tol = 1e-10);

// Phase-equation residual: theta(t) + arg zeta(1/2 + sigma_offset + i t)
// - (n - 3/2) pi, with theta evaluated on the log-gamma path. Vanishes when
// t is the n-th zero (and the index is right).
double exact_residual(double t, std::int64_t n, double sigma_offset);

// Smooth-counting residual: (t/2pi) log(t/(2 pi e))
// + arg zeta(1/2 + 1e-6 + i t)/pi - (n - 11/8). Requires t > 2 pi e.
double asymptotic_residual(double t, std::int64_t n);

namespace detail {

// Raw map runner shared with the dynamics module: never throws on a Lambert
// domain violation, records the failing iterate instead.
struct MapRun {
  std::vector<double> iterates;  // t0 .. t_k, truncated on escape
  int escaped_at = -1;           // iterate index that failed, -1 if none
};

MapRun run_map(std::int64_t n, double delta, int k_iters, double t0);

}  // namespace detail

}  // namespace zetamap
