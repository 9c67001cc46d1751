#pragma once
#include <optional>
#include <variant>
#include <vector>

#include "helisphere/numerics.hpp"

namespace helisphere {

// Angular momentum profiles K(z).  Together with the pitch h, a profile
// determines a helicoidal surface.

struct ConstantK {
  double c;
};
struct LinearK {
  double k0, c;  // K(z) = k0*z + c
};
struct CatenaryK {
  double c;  // K(z) = -c/z, 0 < c < 1/2
};
struct MinimalHelicoidalK {
  double h, c;  // K(z) = -c*sqrt(h^2+(1-h^2)z^2)/sqrt(z^4+h^2 c^2)
};
struct TabulatedK {
  std::vector<double> z, K, dK;  // strictly increasing z; C1 interpolant
};

using MomentumKind =
    std::variant<ConstantK, LinearK, CatenaryK, MinimalHelicoidalK, TabulatedK>;

struct MomentumProfile {
  MomentumKind kind;
  double z_lo = 0.0, z_hi = 1.0;  // closed evaluation domain
};

// Factories; the domain is the natural one bounded by turning points of
// 1 - z^2 - K^2 (intersected with z >= 0).
MomentumProfile make_constant(double c);
MomentumProfile make_linear(double k0, double c);
MomentumProfile make_catenary(double c);
MomentumProfile make_minimal_helicoidal(double h, double c);
MomentumProfile make_tabulated(std::vector<double> z, std::vector<double> K,
                               std::vector<double> dK = {});

struct MomentumValue {
  double K, dK;
};

// Domain-checked evaluation.
MomentumValue eval_momentum(const MomentumProfile& p, double z);
// Unchecked evaluation used by the integrators; clamps tabulated data to its
// hull and otherwise extends the closed form.
MomentumValue eval_momentum_raw(const MomentumProfile& p, double z);

double curvature_from_momentum(const MomentumProfile& p, double z);

// Q(z) = 1 - z^2 - K(z)^2; vanishes at turning points.
double momentum_Q(const MomentumProfile& p, double z);
double momentum_Q_raw(const MomentumProfile& p, double z);

// Arc length s(z1) - s(z0) = Int dz / sqrt(Q).  The integral is improper but
// finite when an endpoint is a turning point.
double arc_length_of_height(const MomentumProfile& p, double z0, double z1);

struct PeriodInfo {
  bool oscillates = false;  // false: no pair of turning points inside (0,1)
  double S = 0.0;           // z-period in arc length
  double delta_lambda = 0.0;  // longitude advance over one z-period
  double z_minus = 0.0, z_plus = 0.0;
};

PeriodInfo z_period_and_rotation(const MomentumProfile& p);

// Turning points of Q inside the domain (refined by bisection).
std::vector<double> turning_heights(const MomentumProfile& p);

}  // namespace helisphere
