#pragma once

#include <complex>

namespace zetamap {

using ComplexValue = std::complex<double>;

// Principal branch W0 of the Lambert W function, i.e. the solution w >= -1
// of w exp(w) = x, defined for x >= -1/e (a 1e-15 slack is tolerated at the
// branch point). Branch-point series / log asymptote starting guess refined
// by Halley iteration; residual |w exp(w) - x| <= 1e-13 max(1, |x|).
double lambert_w0(double x);

// log Gamma(z) for Re(z) > 0. The imaginary part follows the continuous
// (log-of-product) branch, not the principal value of log of Gamma(z).
// Lanczos approximation, g = 7 with the 9-coefficient Godfrey set.
ComplexValue log_gamma(ComplexValue z);

// Riemann-Siegel theta, theta(t) = Im log Gamma(1/4 + i t/2) - (t/2) log pi
// for t >= 0. Below kThetaCrossover the log-gamma path is used; above it the
// asymptotic series, which is already below 1e-12 error at the crossover.
double theta(double t);

double theta_via_log_gamma(double t);
double theta_asymptotic(double t);

inline constexpr double kThetaCrossover = 30.0;

}  // namespace zetamap
