#pragma once

// Test-only reference implementations, kept independent of the library's
// evaluation paths.

#include <complex>

namespace oracles {

// zeta via the alternating (eta) series with Cohen-Rodriguez Villegas-Zagier
// acceleration. Error grows like exp(pi |Im s| / 2), so this is a small-|t|
// oracle only; callers should stay below |Im s| ~ 120.
std::complex<double> zeta_eta_series(std::complex<double> s);

// log Gamma by upward recurrence into |z| >= 30 followed by a 20-term
// Stirling series.
std::complex<double> log_gamma_stirling(std::complex<double> z);

}  // namespace oracles
