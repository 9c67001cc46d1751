#pragma once
#include "helisphere/curve.hpp"

namespace helisphere {

struct CatenaryParams {
  double beta;  // in (0, pi/2)
  double c;     // sin(beta)/2
};

struct SmallCircleParams {
  double k0;  // curvature > 0
  double c;   // offset, |c| < sqrt(1+k0^2)
};

CatenaryParams make_catenary_params(double beta);

// Great semicircle at angle theta to the equator; momentum constant -cos(theta).
ProfileCurve great_circle(double theta);

// Parallel z = sin(phi0); momentum constant -cos(phi0), constant height.
ProfileCurve parallel(double phi0);

// Small circle with momentum K(z) = k0 z + c, restricted to z > 0.
ProfileCurve small_circle(const SmallCircleParams& p);

// Spherical catenary C_beta: z(s) = sqrt((1+cos(beta) sin(2s))/2), longitude
// by quadrature, anchored at lambda(0) = 0.
ProfileCurve catenary(const CatenaryParams& p, double s_begin, double s_end);

// T(beta) = lambda_beta(pi) / (2 pi): longitude turns per z-period.
double closure_function(double beta);

// Unique beta with T(beta) = q, for q in (1/2, sqrt(2)/2).
CatenaryParams solve_beta_for_rotation(double q);

// Continuous branch of atan((a + b*tan(u))/d) across poles of tan.
double unwrapped_atan_tan(double a, double b, double d, double u);

}  // namespace helisphere
