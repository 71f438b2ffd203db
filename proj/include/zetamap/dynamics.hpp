#pragma once

#include <cstdint>
#include <vector>

namespace zetamap {

enum class OrbitClass { fixed_point, periodic, aperiodic, escaped };

struct Classification {
  OrbitClass kind = OrbitClass::aperiodic;
  int period = 0;       // smallest recurrence, set when kind == periodic
  int escaped_at = -1;  // failing iterate index, set when kind == escaped

  friend bool operator==(const Classification&, const Classification&) = default;
};

// Post-transient spread at or below this classifies as a fixed point, and
// bounds the recurrence error for periodic orbits.
inline constexpr double kFixedPointTol = 1e-6;

// Largest period searched before declaring an orbit aperiodic.
inline constexpr int kMaxPeriod = 32;

// The damped map viewed as a one-parameter dynamical system.
struct OrbitRecord {
  std::int64_t n = 0;
  double delta = 0.0;
  double t0 = 1.0;
  std::vector<double> iterates;  // t0 .. t_k, truncated when escaped
  Classification classification;
  int transient_discarded = 0;
};

OrbitRecord orbit(std::int64_t n, double delta, int total_iters, int transient,
                  double t0 = 1.0);

struct BifurcationScan {
  std::int64_t n = 0;
  std::vector<double> delta_grid;  // strictly increasing
  // Last samples_per_delta post-transient iterates per grid point; empty for
  // escaped points.
  std::vector<std::vector<double>> attractor_samples;
  std::vector<Classification> classifications;
};

BifurcationScan bifurcation_scan(std::int64_t n, double delta_min, double delta_max,
                                 int steps, int total_iters, int transient,
                                 int samples_per_delta);

// Smallest delta, to within refine_tol, at which the orbit classification
// departs from fixed_point: coarse scan over [0, delta_max] then bisection.
// Throws BifurcationNotFoundError when no departure is found.
double first_bifurcation_delta(std::int64_t n, double delta_max, int coarse_steps,
                               double refine_tol);

}  // namespace zetamap
