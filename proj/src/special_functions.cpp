#include "zetamap/special_functions.hpp"

#include <cmath>
#include <numbers>

#include "zetamap/errors.hpp"

namespace zetamap {
namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kNegInvE = -1.0 / std::numbers::e;

// Lanczos approximation, g = 7, Godfrey's 9-coefficient set.
constexpr double kLanczosG = 7.0;
constexpr double kLanczos[9] = {
    0.99999999999980993,     676.5203681218851,     -1259.1392167224028,
    771.32342877765313,      -176.61502916214059,   12.507343278686905,
    -0.13857109526572012,    9.9843695780195716e-6, 1.5056327351493116e-7,
};

// W0 near the branch point in powers of rho = sqrt(2 (e x + 1)).
double branch_point_series(double rho) {
  return -1.0 + rho * (1.0 + rho * (-1.0 / 3.0 + rho * (11.0 / 72.0)));
}

}  // namespace

double lambert_w0(double x) {
  if (std::isnan(x)) throw DomainError("lambert_w0: NaN argument");
  if (x < kNegInvE - 1e-15) {
    throw DomainError("lambert_w0: x below the branch point -1/e");
  }
  if (x <= kNegInvE) return -1.0;  // within the branch-point slack
  if (x == 0.0) return 0.0;

  // x - kNegInvE is exact near the branch point, so rho loses no digits.
  const double rho = std::sqrt(2.0 * std::numbers::e * (x - kNegInvE));
  double w;
  if (rho < 1e-4) {
    // Halley degenerates as w -> -1 (f' -> 0); the series is eps-accurate.
    return branch_point_series(rho);
  }
  if (rho < 0.5) {
    w = branch_point_series(rho);
  } else if (x < 3.0) {
    w = std::log1p(x);
  } else {
    const double l1 = std::log(x);
    const double l2 = std::log(l1);
    w = l1 - l2 + l2 / l1;
  }
  for (int iter = 0; iter < 12; ++iter) {
    const double ew = std::exp(w);
    const double f = w * ew - x;
    const double fp = ew * (1.0 + w);
    const double step = f / (fp - 0.5 * f * (2.0 + w) / (1.0 + w));
    w -= step;
    if (std::abs(step) < 1e-15 * (1.0 + std::abs(w))) break;
  }
  return w;
}

ComplexValue log_gamma(ComplexValue z) {
  if (!(z.real() > 0.0)) {
    throw DomainError("log_gamma: requires Re(z) > 0");
  }
  const ComplexValue zm1 = z - 1.0;
  ComplexValue series(kLanczos[0], 0.0);
  for (int i = 1; i < 9; ++i) {
    series += kLanczos[i] / (zm1 + static_cast<double>(i));
  }
  // The shifted base stays in the right half-plane and the series never
  // winds about zero for Re(z) > 0, so both principal logs are continuous.
  const ComplexValue base = zm1 + kLanczosG + 0.5;
  return 0.5 * std::log(2.0 * kPi) + (zm1 + 0.5) * std::log(base) - base +
         std::log(series);
}

double theta_via_log_gamma(double t) {
  if (t < 0.0) throw DomainError("theta: requires t >= 0");
  const ComplexValue lg = log_gamma(ComplexValue(0.25, 0.5 * t));
  return lg.imag() - 0.5 * t * std::log(kPi);
}

double theta_asymptotic(double t) {
  if (t <= 0.0) throw DomainError("theta_asymptotic: requires t > 0");
  const double w = t / (2.0 * kPi);
  return 0.5 * t * std::log(w) - 0.5 * t - kPi / 8.0 + 1.0 / (48.0 * t) +
         7.0 / (5760.0 * t * t * t);
}

double theta(double t) {
  if (t < 0.0) throw DomainError("theta: requires t >= 0");
  return t < kThetaCrossover ? theta_via_log_gamma(t) : theta_asymptotic(t);
}

}  // namespace zetamap
