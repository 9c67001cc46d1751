#pragma once
#include "helisphere/curve.hpp"

namespace helisphere {

struct HelicoidalSurface {
  double pitch = 0.0;  // h >= 0
  ProfileCurve profile;
};

struct FormsAtPoint {
  double g11 = 0, g12 = 0, g22 = 0;
  double s11 = 0, s12 = 0, s22 = 0;
  double alpha = 0;
  double H = 0, K_ext = 0, K_G = 0;
};

std::array<double, 4> immerse(const HelicoidalSurface& surf, double s, double t);

// (g11, g12, g22) = (1, -h K, h^2 + (1-h^2) z^2)
std::array<double, 3> first_form(const HelicoidalSurface& surf, double s);

// alpha = sqrt(h^2 (1-K^2) + (1-h^2) z^2)
double area_density(const HelicoidalSurface& surf, double s);

std::array<double, 4> unit_normal(const HelicoidalSurface& surf, double s,
                                  double t);

// (s11, s12, s22) = (z K'/alpha, h (1-K^2)/alpha, (1-h^2) z^2 K/alpha)
std::array<double, 3> second_form(const HelicoidalSurface& surf, double s);

double mean_curvature(const HelicoidalSurface& surf, double s);

// (K_ext, K_G = 1 + K_ext)
std::pair<double, double> extrinsic_and_gauss(const HelicoidalSurface& surf,
                                              double s);

// Rotational surfaces only (h = 0): (kappa1, kappa2) = (K'(z), K(z)/z).
std::pair<double, double> principal_curvatures_rotational(
    const HelicoidalSurface& surf, double s);

// All closed-form quantities at once.
FormsAtPoint closed_forms(const HelicoidalSurface& surf, double s);

// Closed forms from (z, K, dK, h) directly; shared by the curve-free checks.
FormsAtPoint closed_forms_at_height(double h, double z, double K, double dK);

}  // namespace helisphere
