#pragma once

#include "zetamap/special_functions.hpp"

namespace zetamap {

enum class ZetaBackend {
  // Truncated Dirichlet sum plus Bernoulli tail corrections; the accuracy
  // reference, O(|Im s|) cost.
  euler_maclaurin,
  // Routes through hardy_z on the critical line for |Im s| > 50, O(sqrt t)
  // cost; falls back to euler_maclaurin everywhere else.
  riemann_siegel_auto,
};

// zeta(s) on the strip 0 < Re(s) <= 2 (wider Re is accepted but untested).
// Throws PoleError within 1e-8 of s = 1 and DomainError for Re(s) <= 0.
ComplexValue zeta(ComplexValue s, ZetaBackend backend = ZetaBackend::euler_maclaurin);

// Hardy Z function, Z(t) = exp(i theta(t)) zeta(1/2 + i t), real for real t.
// Riemann-Siegel main sum over m <= floor(sqrt(t/2pi)) plus remainder terms
// C0..C6; sign changes locate the zeros. Measured against euler_maclaurin,
// the absolute error stays below 2.5e-8 for t >= 50 and falls rapidly with t.
double hardy_z(double t);

// Principal argument, in (-pi, pi], of zeta(1/2 + sigma_offset + i t).
// sigma_offset must lie in [0, 0.1]. For sigma_offset = 0 and t > 50 the
// value is derived from hardy_z and theta; otherwise from euler_maclaurin.
double arg_zeta_half(double t, double sigma_offset = 0.0);

// |zeta| below this at an arg evaluation point means the caller sits on a
// zero; IllConditionedArgError is raised.
inline constexpr double kArgModulusFloor = 1e-13;

// t above which arg_zeta_half (at zero offset) reads the argument off
// hardy_z and theta instead of the Euler-Maclaurin value.
inline constexpr double kRiemannSiegelCutoff = 50.0;

// t above which riemann_siegel_auto routes zeta values through hardy_z; the
// measured hardy_z error is below 1e-8 from here on.
inline constexpr double kAutoRouteCutoff = 100.0;

}  // namespace zetamap
