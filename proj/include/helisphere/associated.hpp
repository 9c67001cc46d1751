#pragma once
#include <functional>

#include "helisphere/momentum.hpp"

namespace helisphere {

struct AssociatedParams {
  double beta;   // in (0, pi/2]
  double theta;  // in [0, pi]; 0 = catenoid, pi/2 = conjugate helicoid
};

struct HelicoidParams {
  double h;  // pitch >= 0, != 1
  double c;  // in [0, 1/2)
};

// Solves h/(1+h^2) = (1/2) sin(beta) sin(theta) and
// c (1-h^2)/(1+h^2) = (1/2) sin(beta) cos(theta); h < 1 iff theta < pi/2.
HelicoidParams params_from_associated(const AssociatedParams& ap);

// Inverse map: sin^2(beta)/4 = ((1-h^2)^2 c^2 + h^2)/(1+h^2)^2 and
// cos(theta) = c (1-h^2)/sqrt((1-h^2)^2 c^2 + h^2).
AssociatedParams associated_from_params(const HelicoidParams& hp);

// (tan(beta/2), cot(beta/2)).
std::pair<double, double> conjugate_pitches(double beta);

struct PullbackReport {
  double max_mismatch = 0.0;
  int shift_sign = +1;  // s-shift +pi/4 (h<1) or -pi/4 (h>1)
};

// Pulls the Lawson helicoid metric back through
// phi(s,t) = (s +- pi/4, t/sqrt(1+h^2)) and compares with the catenoid metric.
PullbackReport isometry_pullback(double beta, double h);

struct IsothermalForms {
  double beta = 0.0, theta = 0.0;
  double sxx = 0.0, sxy = 0.0, syy = 0.0;  // second form, constant in (x,y)
  // Conformal factor of the first form as a function of the catenoid arc
  // parameter: ztilde(s)^2.
  std::function<double(double)> conformal_factor;
};

IsothermalForms isothermal_forms(const AssociatedParams& ap);

struct AssociationReport {
  HelicoidParams hp;
  double first_form_mismatch = 0.0;
  double second_form_mismatch = 0.0;
};

// Builds Hel_c^h from (beta, theta), transports its fundamental forms to the
// isothermal coordinates of the catenoid, and compares against
// isothermal_forms.
AssociationReport verify_association(const AssociatedParams& ap);

}  // namespace helisphere
