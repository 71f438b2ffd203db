#pragma once

#include <array>

namespace zetamap::detail {

// Chebyshev tables for the Riemann-Siegel remainder terms C0..C6 on the
// fractional part p in [0, 1). C0..C4 are built once at first use from
// Cauchy-integral derivatives of the remainder kernel; C5 and C6 are frozen
// fitted tables (see rs_remainder.cpp). eval(j, p) returns C_j(p).
class RsRemainderTables {
 public:
  static const RsRemainderTables& instance();

  double eval(int j, double p) const;

  // Direct (table-free) evaluation: remainder kernel derivatives at p via a
  // Cauchy integral on the unit circle, orders 0..12. Exposed so tests can
  // cross-check the tables against the defining integrals.
  static std::array<double, 13> kernel_derivatives(double p);
  static double correction_term(int j, const std::array<double, 13>& derivs);

 private:
  RsRemainderTables();

  static constexpr int kDegree = 48;
  std::array<std::array<double, kDegree>, 5> coeffs_{};
};

}  // namespace zetamap::detail
