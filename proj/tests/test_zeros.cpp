#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>
#include <vector>

#include "zetamap/errors.hpp"
#include "zetamap/zero_finder.hpp"
#include "zetamap/zeros.hpp"

using namespace zetamap;

namespace {
constexpr double kPi = std::numbers::pi;

// Reference ordinates; the first is known to full double precision, the
// second is the widely tabulated 9-decimal value.
constexpr double kZero1 = 14.134725141734693;
constexpr double kZero10000 = 9877.782654004;

const std::vector<double>& first_zeros() {
  static const std::vector<double> zeros = find_zeros(1000);
  return zeros;
}
}  // namespace

TEST_CASE("estimate_zero golden values") {
  CHECK(estimate_zero_value(1) == doctest::Approx(14.521346953065633).epsilon(1e-12));
  CHECK(estimate_zero_value(10000) == doctest::Approx(9877.629616492992).epsilon(1e-12));
  CHECK(estimate_zero_value(100000) == doctest::Approx(74920.89103264698).epsilon(1e-12));

  const ZeroEstimate z = estimate_zero(42);
  CHECK(z.n == 42);
  CHECK(z.method == ZeroMethod::closed_form_estimate);
  CHECK(z.iterations == 0);
  CHECK(z.t > 0.0);
  CHECK_THROWS_AS(estimate_zero(0), DomainError);
}

TEST_CASE("estimates are strictly increasing up to n = 160000") {
  double prev = 0.0;
  for (std::int64_t n = 1; n <= 160000; ++n) {
    const double t = estimate_zero_value(n);
    CHECK(t > prev);
    prev = t;
  }
}

TEST_CASE("map_step reduces to the estimator at delta = 0") {
  for (std::int64_t n : {1, 7, 100, 5000}) {
    CHECK(map_step(n, 3.0, 0.0) == estimate_zero_value(n));
    CHECK(map_step(n, 123.0, 0.0) == estimate_zero_value(n));
  }
}

TEST_CASE("map_step frozen first iterate of the n = 1 run") {
  CHECK(map_step(1, 1.0, 0.0921796) == doctest::Approx(14.820085175456175).epsilon(1e-12));
}

TEST_CASE("map_step near-fixed-point at the reference 20-step value") {
  const double t20 = 14.134725496347967;
  CHECK(std::abs(map_step(1, t20, 0.0921796) - t20) < 1e-6);
}

TEST_CASE("map_step domain guard carries context") {
  // delta large enough to push the effective index below the branch point
  try {
    // arg zeta at this height is close to pi, so delta just above
    // (n - 11/8 + 1) / arg forces an escape for n = 1
    map_step(1, 14.8, 40.0);
    FAIL("expected MapDomainError");
  } catch (const MapDomainError& e) {
    CHECK(e.n() == 1);
    CHECK(e.delta() == 40.0);
    CHECK(e.t_prev() == 14.8);
  }
  CHECK_THROWS_AS(map_step(0, 1.0, 0.1), DomainError);
  CHECK_THROWS_AS(map_step(3, -1.0, 0.1), DomainError);
}

TEST_CASE("iterate_map reproduces the reference 20-step runs") {
  const std::vector<double> run1 = iterate_map(1, 0.0921796, 20, 1.0);
  REQUIRE(run1.size() == 21);
  CHECK(run1.front() == 1.0);
  CHECK(std::abs(run1.back() - 14.134725496347967) < 1e-5);

  const std::vector<double> run2 = iterate_map(10000, 0.2639143, 20, 1.0);
  CHECK(std::abs(run2.back() - 9877.782653979717) < 1e-5);
}

TEST_CASE("iterate_map reports the escaping iterate") {
  try {
    iterate_map(1, 40.0, 20, 14.8);
    FAIL("expected MapDomainError");
  } catch (const MapDomainError& e) {
    CHECK(e.iterate() >= 1);
  }
}

TEST_CASE("solve_zero golden values and convergence flags") {
  const ZeroEstimate big = solve_zero(100000, 0.1595388, 20, 1.0);
  CHECK(std::abs(big.t - 74920.82749899139) < 1e-5);
  CHECK(big.converged);
  CHECK(big.method == ZeroMethod::damped_map);

  const ZeroEstimate mid = solve_zero(50000, 0.1572079, 20, 1.0);
  CHECK(std::abs(mid.t - 40433.68738541853) < 1e-5);

  // chaotic regime never settles
  const ZeroEstimate chaotic = solve_zero(1, 2.0, 20, 1.0);
  CHECK_FALSE(chaotic.converged);

  // delta = 0 collapses onto the estimator in two steps
  const ZeroEstimate flat = solve_zero(123, 0.0);
  CHECK(flat.t == estimate_zero_value(123));
  CHECK(flat.iterations == 2);
  CHECK(flat.converged);
}

TEST_CASE("solve_zero at delta = 0 equals the estimator exactly for n <= 1000") {
  for (std::int64_t n = 1; n <= 1000; ++n) {
    CHECK(solve_zero(n, 0.0).t == estimate_zero_value(n));
  }
}

TEST_CASE("damped map beats the estimator by far at the tuned deltas") {
  const double map1 = solve_zero(1, 0.0921796, 20, 1.0).t;
  const double est1 = estimate_zero_value(1);
  CHECK(std::abs(map1 - kZero1) * 100.0 < std::abs(est1 - kZero1));

  const double map2 = solve_zero(10000, 0.2639143, 20, 1.0).t;
  const double est2 = estimate_zero_value(10000);
  CHECK(std::abs(map2 - kZero10000) * 100.0 < std::abs(est2 - kZero10000));
}

TEST_CASE("converged solves sit on a fixed point of the map") {
  const struct {
    std::int64_t n;
    double delta;
  } cases[] = {{10000, 0.2639143}, {50000, 0.1572079}, {100000, 0.1595388}};
  for (const auto& c : cases) {
    const ZeroEstimate z = solve_zero(c.n, c.delta, 40, 1.0);
    REQUIRE(z.converged);
    REQUIRE(z.final_step <= 1e-10);
    CHECK(std::abs(map_step(c.n, z.t, c.delta) - z.t) <= 1e-8);
  }
}

TEST_CASE("exact_residual vanishes at true zeros with the right index") {
  const auto& zeros = first_zeros();
  CHECK(std::abs(exact_residual(zeros[0], 1, 1e-6)) < 1e-3);
  CHECK(std::abs(exact_residual(zeros[99], 100, 1e-6)) < 1e-3);

  // an off-by-one index shifts the residual by one pi step
  CHECK(exact_residual(zeros[99], 99, 1e-6) == doctest::Approx(kPi).epsilon(1e-3));
  CHECK(exact_residual(zeros[99], 101, 1e-6) == doctest::Approx(-kPi).epsilon(1e-3));
}

TEST_CASE("exact_residual is ill-conditioned exactly on a zero at zero offset") {
  // the modulus floor trips only when t sits numerically on the zero
  const auto& zeros = first_zeros();
  CHECK_NOTHROW(exact_residual(zeros[0] + 1e-4, 1, 0.0));
}

TEST_CASE("asymptotic_residual behavior") {
  CHECK_THROWS_AS(asymptotic_residual(10.0, 1), DomainError);

  // with the arg term dropped the estimator inverts the smooth equation
  const double t_hat = estimate_zero_value(10000);
  const double smooth =
      t_hat / (2.0 * kPi) * std::log(t_hat / (2.0 * kPi * std::numbers::e)) -
      (10000.0 - 1.375);
  CHECK(std::abs(smooth) < 1e-9);

  CHECK(std::abs(asymptotic_residual(kZero10000, 10000)) < 0.05);

  // the asymptotic equation weakens toward small n (the first zero itself
  // sits below the 2 pi e domain bound, so the earliest admissible one is #2)
  const auto& zeros = first_zeros();
  CHECK(std::abs(asymptotic_residual(zeros[1], 2)) >
        10.0 * std::abs(asymptotic_residual(zeros[999], 1000)));
}

TEST_CASE("find_zeros matches the reference anchors") {
  const auto& zeros = first_zeros();
  REQUIRE(zeros.size() == 1000);
  CHECK(zeros[0] == doctest::Approx(kZero1).epsilon(1e-10));
  CHECK(zeros[1] == doctest::Approx(21.022039638771555).epsilon(1e-10));
  int below_100 = 0;
  for (double z : zeros) {
    if (z < 100.0) ++below_100;
  }
  CHECK(below_100 == 29);
}
