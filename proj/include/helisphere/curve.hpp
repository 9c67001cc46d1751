#pragma once
#include <array>
#include <functional>
#include <memory>
#include <optional>

#include "helisphere/momentum.hpp"

namespace helisphere {

struct CurveSample {
  double s = 0.0, z = 0.0, lambda = 0.0;
  std::array<double, 3> pos{}, tan{};
};

struct PosTan {
  std::array<double, 3> pos{}, tan{};
};

struct ReconstructionConfig {
  double rtol = 1e-10;
  double atol = 1e-12;
  double max_step = 0.02;
  std::size_t n_samples = 1000;
};

// A spherical curve in the open upper hemisphere, with continuous (unwrapped)
// longitude.  `state(s)` returns (z, dz/ds, lambda, dlambda/ds).
struct ProfileCurve {
  MomentumProfile momentum;
  std::vector<CurveSample> samples;
  std::vector<double> turning_points;  // s-values where dz/ds = 0
  std::optional<double> z_period;
  bool constant_z = false;
  double s_begin = 0.0, s_end = 0.0;
  std::function<std::array<double, 4>(double)> state;

  CurveSample at(double s) const;
};

// Builds position and unit tangent from (z, dz, lambda, dlambda).
CurveSample curve_sample_from_state(double s, double z, double dz,
                                    double lambda, double dlambda);

// Integrates the arc-length system z'' = -z - K K', lambda' = K/(z^2-1) from
// z(s_begin) = z_init with z'(s_begin) = dz_sign_init * sqrt(1-z^2-K^2) and
// lambda(s_begin) = 0.
ProfileCurve reconstruct_curve(const MomentumProfile& p, double s_begin,
                               double s_end, double z_init, int dz_sign_init,
                               const ReconstructionConfig& cfg = {});

// Momentum recovered from samples: xdot*y - x*ydot.
std::vector<double> momentum_of_samples(const std::vector<PosTan>& pts);
std::vector<double> momentum_of_samples(const std::vector<CurveSample>& pts);

// Fills `samples` by evaluating `state` uniformly on [s_begin, s_end].
void resample_curve(ProfileCurve& curve, std::size_t n_samples);

}  // namespace helisphere
