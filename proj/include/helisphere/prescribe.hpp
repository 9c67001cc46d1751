#pragma once
#include <functional>

#include "helisphere/momentum.hpp"

namespace helisphere {

struct PrescriptionResult {
  MomentumProfile momentum;    // tabulated over the validity interval
  double integration_constant = 0.0;
  int sign = 1;
  double valid_lo = 0.0, valid_hi = 0.0;  // where K^2 + z^2 < 1 (and the
                                          // extrinsic radicand >= 0)
};

// Momentum K(z) = sign * sqrt(h^2+(1-h^2)z^2) A / sqrt(1+h^2 A^2) with
// z^2 A(z) = 2 Int z H dz + cst, accumulated over [z_lo, z_hi].
PrescriptionResult momentum_from_mean(double h,
                                      const std::function<double(double)>& H,
                                      double z_lo, double z_hi, double cst,
                                      int sign);

// Momentum K = sign * sqrt(1 + (1-h^2) z^2 B / (z^2 + h^2 B)) with
// B(z) = 2 Int z K_ext dz + cst.  Requires h != 1.
PrescriptionResult momentum_from_extrinsic(
    double h, const std::function<double(double)>& Kext, double z_lo,
    double z_hi, double cst, int sign);

struct RoundTripReport {
  double residual = 0.0;       // sup-norm distance to the input profile
  double integration_constant = 0.0;
  int sign = 1;
};

// Recovers H(z) from p, re-solves the mean-curvature prescription, and
// reports the best match over the integration constant and sign.
RoundTripReport round_trip_mean(double h, const MomentumProfile& p);

}  // namespace helisphere
