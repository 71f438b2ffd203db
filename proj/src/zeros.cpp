#include "zetamap/zeros.hpp"

#include <cmath>
#include <numbers>

#include "zetamap/errors.hpp"
#include "zetamap/special_functions.hpp"
#include "zetamap/zeta.hpp"

namespace zetamap {
namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr double kInvE = 1.0 / std::numbers::e;

// Solves (t/2pi) log(t/(2 pi e)) = a for t via W0. The a -> 0 limit is
// 2 pi e; W0(a/e) -> 0 there, so the ratio is taken out explicitly.
double smooth_zero_curve(double a) {
  if (a == 0.0) return kTwoPi * std::numbers::e;
  return kTwoPi * a / lambert_w0(a * kInvE);
}

double effective_index(std::int64_t n, double t_prev, double delta) {
  return static_cast<double>(n) - 1.375 - delta / kPi * arg_zeta_half(t_prev, 0.0);
}

}  // namespace

double estimate_zero_value(std::int64_t n) {
  if (n < 1) throw DomainError("estimate_zero: requires n >= 1");
  return smooth_zero_curve(static_cast<double>(n) - 1.375);
}

ZeroEstimate estimate_zero(std::int64_t n) {
  ZeroEstimate z;
  z.n = n;
  z.t = estimate_zero_value(n);
  z.method = ZeroMethod::closed_form_estimate;
  z.delta = 0.0;
  z.iterations = 0;
  z.converged = true;
  z.final_step = 0.0;
  return z;
}

double map_step(std::int64_t n, double t_prev, double delta) {
  if (n < 1) throw DomainError("map_step: requires n >= 1");
  if (!(t_prev > 0.0)) throw DomainError("map_step: requires t_prev > 0");
  if (delta == 0.0) {
    // The damping term drops out and the map is the plain estimator.
    return smooth_zero_curve(static_cast<double>(n) - 1.375);
  }
  const double a = effective_index(n, t_prev, delta);
  // W0 branch domain, with a small slack on the argument a/e.
  if (a * kInvE < -kInvE + 1e-12) {
    throw MapDomainError(n, t_prev, delta, -1);
  }
  return smooth_zero_curve(a);
}

namespace detail {

MapRun run_map(std::int64_t n, double delta, int k_iters, double t0) {
  if (n < 1) throw DomainError("iterate_map: requires n >= 1");
  if (k_iters < 1) throw DomainError("iterate_map: requires k_iters >= 1");
  if (!(t0 > 0.0)) throw DomainError("iterate_map: requires t0 > 0");
  MapRun run;
  run.iterates.reserve(static_cast<std::size_t>(k_iters) + 1);
  run.iterates.push_back(t0);
  double t = t0;
  for (int k = 1; k <= k_iters; ++k) {
    try {
      t = map_step(n, t, delta);
    } catch (const MapDomainError&) {
      run.escaped_at = k;
      return run;
    }
    run.iterates.push_back(t);
  }
  return run;
}

}  // namespace detail

std::vector<double> iterate_map(std::int64_t n, double delta, int k_iters, double t0) {
  detail::MapRun run = detail::run_map(n, delta, k_iters, t0);
  if (run.escaped_at >= 0) {
    throw MapDomainError(n, run.iterates.back(), delta, run.escaped_at);
  }
  return std::move(run.iterates);
}

ZeroEstimate solve_zero(std::int64_t n, double delta, int k_iters, double t0,
                        double step_tol) {
  if (n < 1) throw DomainError("solve_zero: requires n >= 1");
  if (k_iters < 1) throw DomainError("solve_zero: requires k_iters >= 1");
  if (!(t0 > 0.0)) throw DomainError("solve_zero: requires t0 > 0");

  ZeroEstimate z;
  z.n = n;
  z.method = ZeroMethod::damped_map;
  z.delta = delta;

  double t = t0;
  double step = 0.0;
  int performed = 0;
  bool escaped = false;
  for (int k = 1; k <= k_iters; ++k) {
    double next;
    try {
      next = map_step(n, t, delta);
    } catch (const MapDomainError&) {
      escaped = true;
      performed = k;
      break;
    }
    step = std::abs(next - t);
    t = next;
    performed = k;
    if (step <= step_tol) break;
  }
  z.t = t;
  z.iterations = performed;
  z.final_step = step;
  z.converged = !escaped && step <= step_tol;
  return z;
}

double exact_residual(double t, std::int64_t n, double sigma_offset) {
  if (!(t > 0.0)) throw DomainError("exact_residual: requires t > 0");
  if (n < 1) throw DomainError("exact_residual: requires n >= 1");
  const double phase = theta_via_log_gamma(t) + arg_zeta_half(t, sigma_offset);
  return phase - (static_cast<double>(n) - 1.5) * kPi;
}

double asymptotic_residual(double t, std::int64_t n) {
  if (!(t > kTwoPi * std::numbers::e)) {
    throw DomainError("asymptotic_residual: requires t > 2 pi e");
  }
  if (n < 1) throw DomainError("asymptotic_residual: requires n >= 1");
  return t / kTwoPi * std::log(t / (kTwoPi * std::numbers::e)) +
         arg_zeta_half(t, 1e-6) / kPi - (static_cast<double>(n) - 1.375);
}

}  // namespace zetamap
