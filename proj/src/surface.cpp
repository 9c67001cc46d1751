#include "helisphere/surface.hpp"

#include <cmath>

namespace helisphere {

namespace {
struct HeightData {
  double z, K, dK;
};
HeightData height_data(const HelicoidalSurface& surf, double s) {
  double z = surf.profile.state(s)[0];
  auto mv = eval_momentum_raw(surf.profile.momentum, z);
  return {z, mv.K, mv.dK};
}
}  // namespace

FormsAtPoint closed_forms_at_height(double h, double z, double K, double dK) {
  FormsAtPoint f;
  double h2 = h * h;
  f.g11 = 1.0;
  f.g12 = -h * K;
  f.g22 = h2 + (1.0 - h2) * z * z;
  double a2 = h2 * (1.0 - K * K) + (1.0 - h2) * z * z;
  if (a2 < 1e-28) throw DegenerateError("area density vanishes");
  f.alpha = std::sqrt(a2);
  f.s11 = z * dK / f.alpha;
  f.s12 = h * (1.0 - K * K) / f.alpha;
  f.s22 = (1.0 - h2) * z * z * K / f.alpha;
  f.H = 0.5 *
        ((h2 + (1.0 - h2) * z * z) * z * dK +
         (2.0 * h2 * (1.0 - K * K) + (1.0 - h2) * z * z) * K) /
        (a2 * f.alpha);
  f.K_ext = ((1.0 - h2) * z * z * z * K * dK -
             h2 * (1.0 - K * K) * (1.0 - K * K)) /
            (a2 * a2);
  f.K_G = 1.0 + f.K_ext;
  return f;
}

FormsAtPoint closed_forms(const HelicoidalSurface& surf, double s) {
  auto d = height_data(surf, s);
  return closed_forms_at_height(surf.pitch, d.z, d.K, d.dK);
}

std::array<double, 4> immerse(const HelicoidalSurface& surf, double s,
                              double t) {
  auto cs = surf.profile.at(s);
  double h = surf.pitch;
  double cht = std::cos(h * t), sht = std::sin(h * t);
  double ct = std::cos(t), st = std::sin(t);
  double x = cs.pos[0], y = cs.pos[1], z = cs.pos[2];
  return {x * cht - y * sht, x * sht + y * cht, z * ct, z * st};
}

std::array<double, 3> first_form(const HelicoidalSurface& surf, double s) {
  auto d = height_data(surf, s);
  auto f = closed_forms_at_height(surf.pitch, d.z, d.K, d.dK);
  return {f.g11, f.g12, f.g22};
}

double area_density(const HelicoidalSurface& surf, double s) {
  return closed_forms(surf, s).alpha;
}

std::array<double, 4> unit_normal(const HelicoidalSurface& surf, double s,
                                  double t) {
  auto cs = surf.profile.at(s);
  double z = cs.z;
  auto mv = eval_momentum_raw(surf.profile.momentum, z);
  double h = surf.pitch;
  double h2 = h * h;
  double a2 = h2 * (1.0 - mv.K * mv.K) + (1.0 - h2) * z * z;
  if (a2 < 1e-28) throw DegenerateError("unit_normal: area density vanishes");
  double alpha = std::sqrt(a2);
  double x = cs.pos[0], y = cs.pos[1];
  double xd = cs.tan[0], yd = cs.tan[1], zd = cs.tan[2];
  double cht = std::cos(h * t), sht = std::sin(h * t);
  double ct = std::cos(t), st = std::sin(t);
  double n1 = z * (-z * (xd * sht + yd * cht) + zd * (x * sht + y * cht));
  double n2 = z * (z * (xd * cht - yd * sht) + zd * (-x * cht + y * sht));
  double n3 = -z * mv.K * ct - h * zd * st;
  double n4 = -z * mv.K * st + h * zd * ct;
  return {n1 / alpha, n2 / alpha, n3 / alpha, n4 / alpha};
}

std::array<double, 3> second_form(const HelicoidalSurface& surf, double s) {
  auto f = closed_forms(surf, s);
  return {f.s11, f.s12, f.s22};
}

double mean_curvature(const HelicoidalSurface& surf, double s) {
  return closed_forms(surf, s).H;
}

std::pair<double, double> extrinsic_and_gauss(const HelicoidalSurface& surf,
                                              double s) {
  auto f = closed_forms(surf, s);
  return {f.K_ext, f.K_G};
}

std::pair<double, double> principal_curvatures_rotational(
    const HelicoidalSurface& surf, double s) {
  if (surf.pitch != 0.0)
    throw PitchError("principal_curvatures_rotational: pitch must be 0");
  auto d = height_data(surf, s);
  if (d.z < 1e-14)
    throw DegenerateError("principal_curvatures_rotational: z = 0");
  return {d.dK, d.K / d.z};
}

}  // namespace helisphere
