#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "helisphere/families.hpp"
#include "helisphere/momentum.hpp"

using namespace helisphere;

static const double pi = 3.14159265358979323846;

TEST_CASE("eval_momentum on the closed-form kinds") {
  double theta = 1.1;
  auto pc = make_constant(-std::cos(theta));
  for (double z : {0.1, 0.4, 0.7}) {
    auto v = eval_momentum(pc, z);
    CHECK(v.K == doctest::Approx(-std::cos(theta)).epsilon(1e-15));
    CHECK(v.dK == 0.0);
  }
  auto pl = make_linear(2.0, 0.0);
  auto vl = eval_momentum(pl, 0.4);
  CHECK(vl.K == doctest::Approx(0.8).epsilon(1e-15));
  CHECK(vl.dK == doctest::Approx(2.0).epsilon(1e-15));
  auto pk = make_catenary(0.3);
  auto vk = eval_momentum(pk, 0.8);
  CHECK(vk.K == doctest::Approx(-0.3 / 0.8).epsilon(1e-15));
  CHECK(vk.dK == doctest::Approx(0.3 / 0.64).epsilon(1e-15));
}

TEST_CASE("linear eval at a reference point") {
  // z = 0.5 sits above this profile's admissible band, so evaluate raw.
  auto p = make_linear(2.0, 0.0);
  auto v = eval_momentum_raw(p, 0.5);
  CHECK(v.K == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(v.dK == doctest::Approx(2.0).epsilon(1e-15));
}

TEST_CASE("curvature_from_momentum") {
  CHECK(curvature_from_momentum(make_constant(0.4), 0.5) == 0.0);
  CHECK(curvature_from_momentum(make_linear(1.7, 0.1), 0.3) ==
        doctest::Approx(1.7).epsilon(1e-15));
  CHECK(curvature_from_momentum(make_catenary(0.25), 0.6) ==
        doctest::Approx(0.25 / 0.36).epsilon(1e-15));
}

TEST_CASE("domain is enforced") {
  auto p = make_catenary(0.3);  // domain between the two roots of z^2 - z^4 = c^2
  CHECK_THROWS_AS(eval_momentum(p, 0.01), DomainError);
  CHECK_THROWS_AS(eval_momentum(p, 0.999), DomainError);
  CHECK_THROWS_AS(curvature_from_momentum(p, 0.01), DomainError);
}

TEST_CASE("momentum validity K^2 + z^2 <= 1 inside every factory domain") {
  std::vector<MomentumProfile> ps = {
      make_constant(0.6), make_linear(1.2, 0.4), make_catenary(0.2),
      make_minimal_helicoidal(0.8, 0.3)};
  for (const auto& p : ps)
    for (int i = 1; i < 200; ++i) {
      double z = p.z_lo + (p.z_hi - p.z_lo) * i / 200.0;
      auto v = eval_momentum(p, z);
      CHECK(v.K * v.K + z * z <= 1.0 + 1e-12);
      CHECK(std::abs(v.K) <= 1.0 + 1e-12);
    }
}

TEST_CASE("minimal helicoidal domain endpoints solve z^4 + c^2 = z^2") {
  for (double h : {0.0, 0.5, 2.0})
    for (double c : {0.1, 0.3, 0.45}) {
      auto p = make_minimal_helicoidal(h, c);
      CHECK(std::pow(p.z_lo, 4) + c * c ==
            doctest::Approx(p.z_lo * p.z_lo).epsilon(1e-10));
      CHECK(std::pow(p.z_hi, 4) + c * c ==
            doctest::Approx(p.z_hi * p.z_hi).epsilon(1e-10));
    }
}

TEST_CASE("arc_length_of_height closed-form cases") {
  // K = 0: s(z) = arcsin z.
  auto p0 = make_constant(0.0);
  for (double z : {0.2, 0.5, 0.9})
    CHECK(arc_length_of_height(p0, 0.0, z) ==
          doctest::Approx(std::asin(z)).epsilon(1e-10));
  // Constant c: quarter period from equator to the top.
  for (double c : {0.2, 0.6}) {
    auto p = make_constant(c);
    CHECK(arc_length_of_height(p, 0.0, std::sqrt(1.0 - c * c)) ==
          doctest::Approx(pi / 2).epsilon(1e-8));
  }
  // Catenary: half z-period is pi/2.
  for (double beta : {0.4, 1.0}) {
    auto p = make_catenary(0.5 * std::sin(beta));
    CHECK(arc_length_of_height(p, std::sin(beta / 2), std::cos(beta / 2)) ==
          doctest::Approx(pi / 2).epsilon(1e-8));
  }
}

TEST_CASE("arc_length_of_height is signed") {
  auto p = make_constant(0.0);
  CHECK(arc_length_of_height(p, 0.5, 0.2) ==
        doctest::Approx(std::asin(0.2) - std::asin(0.5)).epsilon(1e-10));
}

TEST_CASE("z_period_and_rotation on the catenary") {
  for (double beta : {0.3, 0.9, 1.4}) {
    auto p = make_catenary(0.5 * std::sin(beta));
    auto per = z_period_and_rotation(p);
    REQUIRE(per.oscillates);
    CHECK(per.S == doctest::Approx(pi).epsilon(1e-9));
    CHECK(per.z_minus == doctest::Approx(std::sin(beta / 2)).epsilon(1e-9));
    CHECK(per.z_plus == doctest::Approx(std::cos(beta / 2)).epsilon(1e-9));
    CHECK(per.delta_lambda / (2.0 * pi) ==
          doctest::Approx(closure_function(beta)).epsilon(1e-9));
  }
}

TEST_CASE("great-circle momentum does not oscillate above the equator") {
  auto per = z_period_and_rotation(make_constant(0.5));
  CHECK_FALSE(per.oscillates);
}

TEST_CASE("minimal helicoidal z-period matches the reconstructed orbit") {
  auto p = make_minimal_helicoidal(0.5, 0.3);
  auto per = z_period_and_rotation(p);
  REQUIRE(per.oscillates);
  CHECK(per.S > 0.0);
  CHECK(per.delta_lambda > 0.0);
  // Independent oracle: integrate the orbit and read off turning-point spacing.
  auto curve = reconstruct_curve(p, 0.0, 3.0 * per.S, per.z_minus + 1e-12, +1);
  REQUIRE(curve.turning_points.size() >= 3);
  double gap = curve.turning_points[2] - curve.turning_points[0];
  CHECK(gap == doctest::Approx(per.S).epsilon(1e-8));
}

TEST_CASE("turning heights of the catenary profile") {
  double beta = 0.8;
  auto p = make_catenary(0.5 * std::sin(beta));
  auto th = turning_heights(p);
  REQUIRE(th.size() == 2);
  CHECK(th.front() == doctest::Approx(std::sin(beta / 2)).epsilon(1e-9));
  CHECK(th.back() == doctest::Approx(std::cos(beta / 2)).epsilon(1e-9));
}

TEST_CASE("tabulated profiles interpolate and forbid extrapolation") {
  auto src = make_catenary(0.3);
  std::vector<double> z, K, dK;
  for (int i = 0; i <= 400; ++i) {
    double zz = src.z_lo + (src.z_hi - src.z_lo) * i / 400.0;
    auto v = eval_momentum(src, zz);
    z.push_back(zz);
    K.push_back(v.K);
    dK.push_back(v.dK);
  }
  auto tab = make_tabulated(z, K, dK);
  for (double zz : {0.5, 0.6, 0.77}) {
    auto v = eval_momentum(tab, zz);
    auto w = eval_momentum(src, zz);
    CHECK(v.K == doctest::Approx(w.K).epsilon(1e-10));
    CHECK(v.dK == doctest::Approx(w.dK).epsilon(1e-8));
  }
  CHECK_THROWS_AS(eval_momentum(tab, src.z_lo - 0.01), DomainError);
  CHECK_THROWS_AS(eval_momentum(tab, src.z_hi + 0.01), DomainError);
}

TEST_CASE("tabulated profiles without derivative data fall back to pchip") {
  auto src = make_linear(1.0, 0.1);
  std::vector<double> z, K;
  for (int i = 0; i <= 200; ++i) {
    double zz = src.z_lo + (src.z_hi - src.z_lo) * i / 200.0;
    z.push_back(zz);
    K.push_back(eval_momentum(src, zz).K);
  }
  auto tab = make_tabulated(z, K);
  auto v = eval_momentum(tab, 0.5 * (src.z_lo + src.z_hi));
  CHECK(v.K == doctest::Approx(1.0 * 0.5 * (src.z_lo + src.z_hi) + 0.1)
                   .epsilon(1e-8));
  CHECK(v.dK == doctest::Approx(1.0).epsilon(1e-5));
}

TEST_CASE("tabulated z samples must increase strictly") {
  CHECK_THROWS_AS(make_tabulated({0.3, 0.3, 0.5}, {0.0, 0.0, 0.0}), DomainError);
}

TEST_CASE("momentum_Q vanishes at turning points") {
  auto p = make_catenary(0.25);
  CHECK(std::abs(momentum_Q(p, p.z_lo)) < 1e-12);
  CHECK(std::abs(momentum_Q(p, p.z_hi)) < 1e-12);
  CHECK(momentum_Q(p, 0.5 * (p.z_lo + p.z_hi)) > 0.0);
}
