#include "zetamap/zeta.hpp"

#include <cmath>
#include <numbers>

#include "zetamap/detail/rs_remainder.hpp"
#include "zetamap/errors.hpp"

namespace zetamap {
namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kTwoPi = 2.0 * std::numbers::pi;

// B_{2k} / (2k)! for k = 1..12, the Euler-Maclaurin tail weights.
constexpr double kBernoulliOverFactorial[12] = {
    1.0 / 12.0,
    -1.0 / 720.0,
    1.0 / 30240.0,
    -1.0 / 1209600.0,
    1.0 / 47900160.0,
    -691.0 / 1307674368000.0,
    7.0 / 523069747200.0,
    -3617.0 / 10670622842880000.0,
    43867.0 / 5.109094217170944e18,
    -174611.0 / 8.028576626982912e20,
    854513.0 / 1.5511210043330986e23,
    -236364091.0 / 1.6938241367317436e27,
};

ComplexValue zeta_euler_maclaurin(ComplexValue s) {
  const double abs_t = std::abs(s.imag());
  const long n = std::max(100L, static_cast<long>(std::ceil(2.0 * abs_t)));

  ComplexValue sum(0.0, 0.0);
  for (long m = 1; m < n; ++m) {
    sum += std::exp(-s * std::log(static_cast<double>(m)));
  }
  const double nd = static_cast<double>(n);
  const ComplexValue n_pow = std::exp(-s * std::log(nd));  // N^{-s}
  sum += 0.5 * n_pow;
  sum += n_pow * nd / (s - 1.0);  // N^{1-s} / (s - 1)

  // Tail terms B_{2k}/(2k)! s(s+1)...(s+2k-2) N^{-s-2k+1}, stopped once they
  // fall below the rounding floor of the partial sum.
  ComplexValue pochhammer = s;
  ComplexValue power = n_pow / nd;  // N^{-s-1}
  const double inv_n2 = 1.0 / (nd * nd);
  for (int k = 1; k <= 12; ++k) {
    const ComplexValue term = kBernoulliOverFactorial[k - 1] * pochhammer * power;
    sum += term;
    if (std::abs(term) < 1e-18 * std::abs(sum)) break;
    pochhammer *= (s + static_cast<double>(2 * k - 1)) * (s + static_cast<double>(2 * k));
    power *= inv_n2;
  }
  return sum;
}

double wrap_principal(double a) {
  a = std::fmod(a, kTwoPi);
  if (a <= -kPi) a += kTwoPi;
  if (a > kPi) a -= kTwoPi;
  return a;
}

}  // namespace

double hardy_z(double t) {
  if (!(t > 0.0)) throw DomainError("hardy_z: requires t > 0");
  const double w = t / kTwoPi;
  const double sqrt_w = std::sqrt(w);
  const long nu = static_cast<long>(sqrt_w);
  const double p = sqrt_w - static_cast<double>(nu);
  const double th = theta(t);

  double sum = 0.0;
  for (long m = 1; m <= nu; ++m) {
    const double md = static_cast<double>(m);
    sum += std::cos(th - t * std::log(md)) / std::sqrt(md);
  }
  sum *= 2.0;

  const auto& tables = detail::RsRemainderTables::instance();
  const double x = 1.0 / sqrt_w;  // (t/2pi)^{-1/2}
  // Below 2 pi the expansion variable exceeds 1 and the higher terms only
  // diverge; the leading kernel term alone keeps the sign structure intact.
  const int top_term = nu == 0 ? 0 : 6;
  double corr = tables.eval(top_term, p);
  for (int j = top_term - 1; j >= 0; --j) corr = tables.eval(j, p) + x * corr;
  const double sign = (nu % 2 == 0) ? -1.0 : 1.0;  // (-1)^(nu-1)
  return sum + sign * corr / std::sqrt(sqrt_w);
}

ComplexValue zeta(ComplexValue s, ZetaBackend backend) {
  if (std::abs(s - ComplexValue(1.0, 0.0)) < 1e-8) {
    throw PoleError("zeta: s within the 1e-8 guard around the pole at 1");
  }
  if (!(s.real() > 0.0)) {
    throw DomainError("zeta: requires Re(s) > 0");
  }
  if (backend == ZetaBackend::riemann_siegel_auto && s.real() == 0.5 &&
      std::abs(s.imag()) > kAutoRouteCutoff) {
    const double t = std::abs(s.imag());
    const double z = hardy_z(t);
    const double th = theta(t);
    const ComplexValue value = z * ComplexValue(std::cos(th), -std::sin(th));
    return s.imag() > 0.0 ? value : std::conj(value);
  }
  return zeta_euler_maclaurin(s);
}

double arg_zeta_half(double t, double sigma_offset) {
  if (!(t > 0.0)) throw DomainError("arg_zeta_half: requires t > 0");
  if (!(sigma_offset >= 0.0 && sigma_offset <= 0.1)) {
    throw DomainError("arg_zeta_half: sigma_offset must lie in [0, 0.1]");
  }
  if (sigma_offset == 0.0 && t > kRiemannSiegelCutoff) {
    const double z = hardy_z(t);
    if (std::abs(z) < kArgModulusFloor) {
      throw IllConditionedArgError(t, std::abs(z));
    }
    double a = -theta(t);
    if (z < 0.0) a += kPi;
    return wrap_principal(a);
  }
  const ComplexValue v = zeta(ComplexValue(0.5 + sigma_offset, t));
  const double modulus = std::abs(v);
  if (modulus < kArgModulusFloor) {
    throw IllConditionedArgError(t, modulus);
  }
  return std::atan2(v.imag(), v.real());
}

}  // namespace zetamap
