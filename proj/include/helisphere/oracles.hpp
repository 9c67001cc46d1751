#pragma once
#include <string>

#include "helisphere/surface.hpp"

namespace helisphere {

struct CheckReport {
  std::string name;
  double max_residual = 0.0;
  double tolerance = 0.0;
  bool pass = false;
  std::string grid;

  void finish() { pass = max_residual < tolerance; }
};

// Fundamental forms recomputed from the immersion alone by central
// differences (one Richardson pass); the normal comes from the generalized
// cross product in R^4, oriented to match the closed-form convention.
FormsAtPoint fd_forms(const HelicoidalSurface& surf, double s, double t,
                      double step = 1e-4);

// Gauss curvature from the metric alone (Brioschi formula, the metric depends
// on s only).
double intrinsic_gauss(const HelicoidalSurface& surf, double s, double t);

struct OtsukiReport {
  CheckReport first_integral;  // drift of h(1-h^2-h'^2)/sqrt(1-h^2)
  CheckReport momentum;        // recovered momentum against -c/z
  double c = 0.0;              // h0 sqrt(1-h0^2)
};

// Integrates the support-function ODE of the Otsuki tori over theta in
// [0, span] from h(0) = h0, h'(0) = 0.
OtsukiReport otsuki_check(double h0, double span);

// Residual of r'^2/(r^4(1-r^2)^2) + 1/(r^2(1-r^2)) = 4/C^2 along Cat_beta
// with r = sqrt(1-z^2) differenced against t = lambda(s).  C defaults to
// sin(beta); pass another value for negative controls.
CheckReport brendle_kusner_check(double beta, double C = -1.0);

}  // namespace helisphere
