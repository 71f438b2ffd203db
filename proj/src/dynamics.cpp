#include "zetamap/dynamics.hpp"

#include <algorithm>
#include <cmath>

#include "zetamap/errors.hpp"
#include "zetamap/zeros.hpp"

namespace zetamap {
namespace {

Classification classify_tail(const std::vector<double>& iterates, int transient,
                             int escaped_at) {
  if (escaped_at >= 0) {
    return {.kind = OrbitClass::escaped, .period = 0, .escaped_at = escaped_at};
  }
  const auto tail_begin = iterates.begin() + transient;
  const auto [min_it, max_it] = std::minmax_element(tail_begin, iterates.end());
  if (*max_it - *min_it <= kFixedPointTol) {
    return {.kind = OrbitClass::fixed_point};
  }
  const std::ptrdiff_t tail_len = iterates.end() - tail_begin;
  for (int p = 2; p <= kMaxPeriod && p <= tail_len / 2; ++p) {
    bool recurrent = true;
    for (std::ptrdiff_t i = 0; i + p < tail_len; ++i) {
      if (std::abs(tail_begin[i + p] - tail_begin[i]) > kFixedPointTol) {
        recurrent = false;
        break;
      }
    }
    if (recurrent) return {.kind = OrbitClass::periodic, .period = p};
  }
  return {.kind = OrbitClass::aperiodic};
}

}  // namespace

OrbitRecord orbit(std::int64_t n, double delta, int total_iters, int transient,
                  double t0) {
  if (transient < 0 || transient >= total_iters) {
    throw DomainError("orbit: requires 0 <= transient < total_iters");
  }
  detail::MapRun run = detail::run_map(n, delta, total_iters, t0);
  OrbitRecord record;
  record.n = n;
  record.delta = delta;
  record.t0 = t0;
  record.transient_discarded = transient;
  // Escaped orbits are classified from whatever survives; the transient is
  // clamped so the tail is never empty.
  const int usable_transient =
      std::min<int>(transient, static_cast<int>(run.iterates.size()) - 1);
  record.classification = classify_tail(run.iterates, usable_transient, run.escaped_at);
  record.iterates = std::move(run.iterates);
  return record;
}

BifurcationScan bifurcation_scan(std::int64_t n, double delta_min, double delta_max,
                                 int steps, int total_iters, int transient,
                                 int samples_per_delta) {
  if (!(delta_min < delta_max)) {
    throw DomainError("bifurcation_scan: requires delta_min < delta_max");
  }
  if (steps < 2) throw DomainError("bifurcation_scan: requires steps >= 2");
  if (samples_per_delta < 1 || transient + samples_per_delta > total_iters) {
    throw DomainError("bifurcation_scan: transient + samples must fit in total_iters");
  }

  BifurcationScan scan;
  scan.n = n;
  scan.delta_grid.reserve(static_cast<std::size_t>(steps));
  scan.attractor_samples.reserve(static_cast<std::size_t>(steps));
  scan.classifications.reserve(static_cast<std::size_t>(steps));
  for (int i = 0; i < steps; ++i) {
    const double delta =
        delta_min + (delta_max - delta_min) * static_cast<double>(i) /
                        static_cast<double>(steps - 1);
    OrbitRecord record = orbit(n, delta, total_iters, transient);
    std::vector<double> samples;
    if (record.classification.kind != OrbitClass::escaped) {
      const auto end = record.iterates.end();
      samples.assign(end - samples_per_delta, end);
    }
    scan.delta_grid.push_back(delta);
    scan.attractor_samples.push_back(std::move(samples));
    scan.classifications.push_back(record.classification);
  }
  return scan;
}

double first_bifurcation_delta(std::int64_t n, double delta_max, int coarse_steps,
                               double refine_tol) {
  if (!(delta_max > 0.0)) {
    throw DomainError("first_bifurcation_delta: requires delta_max > 0");
  }
  if (coarse_steps < 2) {
    throw DomainError("first_bifurcation_delta: requires coarse_steps >= 2");
  }
  if (!(refine_tol > 0.0)) {
    throw DomainError("first_bifurcation_delta: requires refine_tol > 0");
  }
  constexpr int kTotalIters = 600;
  constexpr int kTransient = 400;
  const auto is_fixed = [n](double delta) {
    return orbit(n, delta, kTotalIters, kTransient).classification.kind ==
           OrbitClass::fixed_point;
  };

  double lo = 0.0;  // delta = 0 always yields the constant map
  double hi = -1.0;
  for (int i = 1; i <= coarse_steps; ++i) {
    const double delta = delta_max * static_cast<double>(i) / coarse_steps;
    if (is_fixed(delta)) {
      lo = delta;
    } else {
      hi = delta;
      break;
    }
  }
  if (hi < 0.0) {
    throw BifurcationNotFoundError(
        "first_bifurcation_delta: fixed point persists up to delta_max");
  }
  while (hi - lo > refine_tol) {
    const double mid = 0.5 * (lo + hi);
    (is_fixed(mid) ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

}  // namespace zetamap
