#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "helisphere/families.hpp"
#include "helisphere/momentum.hpp"

using namespace helisphere;

static const double pi = 3.14159265358979323846;

TEST_CASE("great circles carry constant momentum -cos(theta)") {
  for (double theta : {pi / 2, pi / 3, 2 * pi / 3}) {
    auto curve = great_circle(theta);
    auto K = momentum_of_samples(curve.samples);
    for (double k : K) CHECK(std::abs(k - (-std::cos(theta))) < 1e-9);
  }
}

TEST_CASE("the meridian great circle stays in the x-z plane") {
  auto curve = great_circle(pi / 2);
  for (const auto& smp : curve.samples) {
    // The longitude jumps by pi at the pole, so pos[0] tracks cos s itself.
    CHECK(smp.pos[0] == doctest::Approx(std::cos(smp.s)).epsilon(1e-12));
    CHECK(std::abs(smp.pos[1]) < 1e-12);
    CHECK(smp.pos[2] == doctest::Approx(std::sin(smp.s)).epsilon(1e-12));
  }
}

TEST_CASE("parallels: constant height, linear longitude") {
  auto curve = parallel(pi / 4);
  CHECK(curve.constant_z);
  for (const auto& smp : curve.samples) {
    CHECK(smp.z == doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-14));
    CHECK(smp.lambda ==
          doctest::Approx(smp.s * std::sqrt(2.0)).epsilon(1e-12));
  }
  auto K = momentum_of_samples(curve.samples);
  for (double k : K) CHECK(std::abs(k + std::cos(pi / 4)) < 1e-9);
  auto K6 = momentum_of_samples(parallel(pi / 6).samples);
  for (double k : K6) CHECK(std::abs(k + std::sqrt(3.0) / 2) < 1e-9);
}

TEST_CASE("small circle closed-form height and unit speed") {
  auto curve = small_circle({1.0, 0.0});
  for (const auto& smp : curve.samples) {
    CHECK(smp.z == doctest::Approx(std::sin(std::sqrt(2.0) * smp.s) /
                                   std::sqrt(2.0))
                       .epsilon(1e-10));
  }
  // unit speed, via finite differences of the embedded positions
  const double h = 1e-6;
  for (double s = curve.s_begin + 0.05; s < curve.s_end - 0.05; s += 0.11) {
    auto a = curve_sample_from_state(s - h, curve.state(s - h)[0],
                                     curve.state(s - h)[1], curve.state(s - h)[2],
                                     curve.state(s - h)[3]);
    auto b = curve_sample_from_state(s + h, curve.state(s + h)[0],
                                     curve.state(s + h)[1], curve.state(s + h)[2],
                                     curve.state(s + h)[3]);
    double v = 0;
    for (int k = 0; k < 3; ++k) {
      double d = (b.pos[k] - a.pos[k]) / (2.0 * h);
      v += d * d;
    }
    CHECK(std::abs(std::sqrt(v) - 1.0) < 1e-7);
  }
}

TEST_CASE("small circle momentum recovery in all lambda branches") {
  for (auto p : {SmallCircleParams{0.8, 0.3}, SmallCircleParams{0.8, 0.8},
                 SmallCircleParams{0.8, -0.8}, SmallCircleParams{1.3, -0.4}}) {
    auto curve = small_circle(p);
    auto K = momentum_of_samples(curve.samples);
    for (std::size_t i = 0; i < K.size(); ++i)
      CHECK(std::abs(K[i] - (p.k0 * curve.samples[i].z + p.c)) < 1e-9);
  }
}

TEST_CASE("small circle longitude is continuous across tan poles") {
  auto curve = small_circle({2.0, 0.5});
  double prev = curve.state(curve.s_begin + 1e-6)[2];
  for (double s = curve.s_begin + 1e-6; s <= curve.s_end - 1e-6; s += 1e-3) {
    double lam = curve.state(s)[2];
    CHECK(std::abs(lam - prev) < 0.2);
    prev = lam;
  }
}

TEST_CASE("small circle with c=0 is the orthogonal circle, up to axial rotation") {
  double delta = 0.9;
  double k0 = std::sinh(delta), ch = std::cosh(delta);
  auto curve = small_circle({k0, 0.0});
  // eta(s) = (sech cos(ch s), -tanh, sech sin(ch s)); same z(s) and the same
  // momentum K = tanh sin(ch s) (the +tanh mirror carries -K), so the two
  // curves differ by a constant rotation about the z-axis.
  auto eta = [&](double s) {
    return std::array<double, 3>{std::cos(ch * s) / ch, -std::tanh(delta),
                                 std::sin(ch * s) / ch};
  };
  double s0 = 0.4;
  auto st0 = curve.state(s0);
  auto e0 = eta(s0);
  double psi = std::atan2(e0[1], e0[0]) - st0[2];
  for (double s = 0.05; s < 1.2; s += 0.07) {
    auto st = curve.state(s);
    auto e = eta(s);
    double r = std::sqrt(1.0 - st[0] * st[0]);
    double x = r * std::cos(st[2] + psi), y = r * std::sin(st[2] + psi);
    CHECK(std::abs(x - e[0]) < 1e-8);
    CHECK(std::abs(y - e[1]) < 1e-8);
    CHECK(std::abs(st[0] - e[2]) < 1e-8);
  }
}

TEST_CASE("small circle rejects unreachable configurations") {
  CHECK_THROWS_AS(small_circle({-0.5, 0.1}), DomainError);  // k0 <= 0
  CHECK_THROWS_AS(small_circle({1.0, 1.5}), DomainError);   // |c| too large
  CHECK_THROWS_AS(small_circle({1.0, 1.35}), DomainError);  // z never positive
}

TEST_CASE("catenary closed-form checkpoints") {
  for (double beta : {0.3, 0.8, 1.3}) {
    auto curve = catenary(make_catenary_params(beta), -1.0, 7.0);
    CHECK(curve.state(0.0)[0] ==
          doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-12));
    CHECK(curve.state(pi / 4)[0] ==
          doctest::Approx(std::cos(beta / 2)).epsilon(1e-12));
    CHECK(std::abs(curve.state(0.0)[2]) < 1e-12);  // anchored lambda(0) = 0
    REQUIRE(curve.z_period.has_value());
    CHECK(*curve.z_period == doctest::Approx(pi));
    auto per = z_period_and_rotation(curve.momentum);
    CHECK(per.S == doctest::Approx(pi).epsilon(1e-9));
  }
}

TEST_CASE("catenary momentum recovery") {
  double beta = 1.1;
  auto curve = catenary(make_catenary_params(beta), 0.0, 2.0 * pi);
  auto K = momentum_of_samples(curve.samples);
  for (std::size_t i = 0; i < K.size(); ++i)
    CHECK(std::abs(K[i] + std::sin(beta) / (2.0 * curve.samples[i].z)) < 1e-9);
}

TEST_CASE("closure function: range, monotonicity, fixture") {
  CHECK(closure_function(1e-3) > 0.5);
  CHECK(closure_function(1e-3) < 0.51);
  CHECK(closure_function(pi / 2 - 1e-3) > 0.705);
  CHECK(closure_function(pi / 2 - 1e-3) < std::sqrt(2.0) / 2);
  double prev = 0.0;
  for (int i = 1; i <= 100; ++i) {
    double T = closure_function((pi / 2 - 2e-4) * i / 100.0 + 1e-4);
    CHECK(T > prev);
    prev = T;
  }
  // Frozen quadrature fixture.
  CHECK(closure_function(pi / 4) ==
        doctest::Approx(0.676979420194115).epsilon(1e-9));
}

TEST_CASE("solve_beta_for_rotation and the closure criterion") {
  auto params = solve_beta_for_rotation(2.0 / 3.0);
  CHECK(std::abs(closure_function(params.beta) - 2.0 / 3.0) < 1e-10);
  // lambda advances by 2 k pi over m z-periods for q = k/m = 2/3.
  auto curve = catenary(params, -0.5, 3.0 * pi + 1.5);
  for (double s = 0.0; s < 1.0; s += 0.13)
    CHECK(std::abs(curve.state(s + 3.0 * pi)[2] - curve.state(s)[2] -
                   4.0 * pi) < 1e-7);
}

TEST_CASE("solve_beta_for_rotation rejects out-of-range targets") {
  CHECK_THROWS_AS(solve_beta_for_rotation(0.45), RangeError);
  CHECK_THROWS_AS(solve_beta_for_rotation(0.72), RangeError);
}

TEST_CASE("unwrapped arctan branch is continuous") {
  double a = 0.3, b = 1.7, d = 0.4;
  double prev = unwrapped_atan_tan(a, b, d, -5.0);
  for (double u = -5.0; u <= 5.0; u += 1e-3) {
    double v = unwrapped_atan_tan(a, b, d, u);
    CHECK(std::abs(v - prev) < 0.1);
    prev = v;
  }
}
