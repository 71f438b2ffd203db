#include "zetamap/zero_finder.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "zetamap/errors.hpp"
#include "zetamap/special_functions.hpp"
#include "zetamap/zeros.hpp"
#include "zetamap/zeta.hpp"

namespace zetamap {
namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr double kScanStart = 10.0;  // safely below the first zero

// The Euler-Maclaurin rotation is used well past the Riemann-Siegel cutoff:
// it is still cheap there and pins the early zeros to ~1e-12, which the
// phase-equation checks divide by a 1e-6 offset.
constexpr double kEmCutoff = 400.0;

double z_value(double t) {
  if (t >= kEmCutoff) return hardy_z(t);
  const ComplexValue v = zeta(ComplexValue(0.5, t));
  const double th = theta(t);
  return v.real() * std::cos(th) - v.imag() * std::sin(th);
}

// Quarter of the mean zero spacing is the base scan resolution; close pairs
// below it are recovered by the validation rescans.
double scan_step(double t) {
  const double spacing = kTwoPi / std::max(0.5, std::log(t / kTwoPi));
  return std::min(1.0, 0.125 * spacing);
}

double bisect_zero(double lo, double hi, double z_lo) {
  double z_hi = z_value(hi);
  const double width_tol = 1e-12 + 4e-16 * hi;
  // Bisection first to tame the bracket, Illinois once it is narrow; any
  // degenerate interpolation falls back to a plain bisection step.
  int side = 0;
  for (int i = 0; i < 80 && hi - lo > width_tol; ++i) {
    double mid = (lo * z_hi - hi * z_lo) / (z_hi - z_lo);
    if (i < 6 || !(mid > lo && mid < hi)) mid = 0.5 * (lo + hi);
    if (mid == lo || mid == hi) break;  // float resolution reached
    const double zm = z_value(mid);
    if (zm == 0.0) return mid;
    if ((z_lo < 0.0) == (zm < 0.0)) {
      lo = mid;
      z_lo = zm;
      if (side == -1) z_hi *= 0.5;
      side = -1;
    } else {
      hi = mid;
      z_hi = zm;
      if (side == 1) z_lo *= 0.5;
      side = 1;
    }
  }
  return std::abs(z_lo) <= std::abs(z_hi) ? lo : hi;
}

// Deviation of the claimed counting function from the theta/arg count at a
// point m lying strictly between zeros. A single missed zero makes the
// result odd; S(t) excursions only ever shift it by even integers.
double count_deviation(double m, std::int64_t claimed) {
  double arg = 0.0;
  bool ok = false;
  const double nudges[] = {0.0, 0.08, -0.08, 0.17, -0.17};
  for (double nudge : nudges) {
    try {
      arg = arg_zeta_half(m + nudge, 0.0);
      ok = true;
      break;
    } catch (const IllConditionedArgError&) {
      continue;
    }
  }
  if (!ok) throw std::runtime_error("zero finder: no well-conditioned count point");
  return static_cast<double>(claimed) - theta(m) / kPi - 1.0 - arg / kPi;
}

void insert_sorted(std::vector<double>& zs, double t) {
  auto it = std::lower_bound(zs.begin(), zs.end(), t);
  if (it != zs.end() && std::abs(*it - t) < 1e-9 * t) return;
  if (it != zs.begin() && std::abs(*(it - 1) - t) < 1e-9 * t) return;
  zs.insert(it, t);
}

// Scans (lo, hi) at the given step and merges any sign-change zeros found.
int rescan_window(std::vector<double>& zs, double lo, double hi, double step) {
  int found = 0;
  double t = lo + 0.25 * step;
  double z_prev = z_value(t);
  while (t < hi) {
    const double t_next = std::min(t + step, hi);
    const double z_next = z_value(t_next);
    if ((z_prev < 0.0) != (z_next < 0.0)) {
      const std::size_t before = zs.size();
      insert_sorted(zs, bisect_zero(t, t_next, z_prev));
      found += static_cast<int>(zs.size() - before);
    }
    t = t_next;
    z_prev = z_next;
  }
  return found;
}

}  // namespace

std::vector<double> find_zeros(std::int64_t count) {
  if (count < 1) throw DomainError("find_zeros: requires count >= 1");
  const std::int64_t target = count + 2;  // small buffer past the requested range
  // Close pairs missed by the base scan (healed afterwards) make the scan run
  // past the nominal end, so the cap carries a generous allowance.
  const double t_cap = estimate_zero_value(target + std::max<std::int64_t>(64, target / 50)) + 50.0;

  std::vector<double> zs;
  zs.reserve(static_cast<std::size_t>(target));
  double t = kScanStart;
  double z_prev = z_value(t);
  while (static_cast<std::int64_t>(zs.size()) < target) {
    if (t > t_cap) throw std::runtime_error("zero finder: scan ran past its cap");
    const double t_next = t + scan_step(t);
    const double z_next = z_value(t_next);
    if ((z_prev < 0.0) != (z_next < 0.0)) {
      zs.push_back(bisect_zero(t, t_next, z_prev));
    }
    t = t_next;
    z_prev = z_next;
  }

  // Validate gap by gap: the claimed count between zeros j and j+1 is j.
  // Odd deviations are definite misses and must be healed; even deviations
  // >= 2 are either a missed close pair or an S(t) excursion, so the gap is
  // rescanned and accepted only if nothing new turns up.
  std::int64_t j = 1;
  int level = 0;
  while (j < std::min<std::int64_t>(static_cast<std::int64_t>(zs.size()), count + 1)) {
    const double gap_lo = zs[static_cast<std::size_t>(j) - 1];
    const double gap_hi = zs[static_cast<std::size_t>(j)];
    const double m = 0.5 * (gap_lo + gap_hi);
    const double q = count_deviation(m, j);
    const double dev_from_even = q - 2.0 * std::round(0.5 * q);
    const bool odd_miss = std::abs(dev_from_even) > 0.35;
    const bool even_suspicious = !odd_miss && std::abs(q) >= 1.2;
    if (!odd_miss && !even_suspicious) {
      ++j;
      level = 0;
      continue;
    }
    if (level >= 2) {
      if (even_suspicious) {  // S excursion: the count is consistent mod 2
        ++j;
        level = 0;
        continue;
      }
      throw std::runtime_error("zero finder: validation failed near t = " +
                               std::to_string(m));
    }
    ++level;
    const double window_lo = j >= 2 ? zs[static_cast<std::size_t>(j) - 2] : kScanStart;
    const double fine = scan_step(gap_hi) / std::pow(16.0, level);
    if (rescan_window(zs, window_lo, gap_hi, fine) > 0) {
      j = std::max<std::int64_t>(1, j - 1);
      level = 0;
    }
  }

  zs.resize(static_cast<std::size_t>(count));
  return zs;
}

}  // namespace zetamap
