#include "helisphere/associated.hpp"

#include <algorithm>
#include <cmath>

#include "helisphere/surface.hpp"

namespace helisphere {

namespace {
const double kPi = 3.14159265358979323846;
}

HelicoidParams params_from_associated(const AssociatedParams& ap) {
  if (ap.beta <= 0.0 || ap.beta >= kPi / 2)
    throw DomainError("params_from_associated: beta must lie in (0, pi/2)");
  if (ap.theta < 0.0 || ap.theta > kPi)
    throw DomainError("params_from_associated: theta must lie in [0, pi]");
  if (ap.theta == kPi)
    throw DomainError("params_from_associated: theta = pi is the h -> inf limit");
  double sb = std::sin(ap.beta);
  double u = 0.5 * sb * std::sin(ap.theta);
  HelicoidParams hp;
  if (u == 0.0) {
    hp.h = 0.0;
    hp.c = 0.5 * sb;  // theta = 0: the catenoid itself
    return hp;
  }
  double disc = std::sqrt(1.0 - 4.0 * u * u);
  hp.h = (ap.theta <= kPi / 2) ? (1.0 - disc) / (2.0 * u)
                               : (1.0 + disc) / (2.0 * u);
  double ct = std::cos(ap.theta);
  hp.c = (std::abs(ct) < 1e-300)
             ? 0.0
             : 0.5 * sb * ct * (1.0 + hp.h * hp.h) / (1.0 - hp.h * hp.h);
  // Residual certificate of the defining relations.
  double h2 = hp.h * hp.h;
  double r1 = hp.h / (1.0 + h2) - u;
  double r2 = hp.c * (1.0 - h2) / (1.0 + h2) - 0.5 * sb * ct;
  if (std::abs(r1) > 1e-12 || std::abs(r2) > 1e-12)
    throw ConvergenceError("params_from_associated: residual too large");
  return hp;
}

AssociatedParams associated_from_params(const HelicoidParams& hp) {
  if (hp.h < 0.0 || hp.h == 1.0)
    throw DomainError("associated_from_params: need h >= 0, h != 1");
  if (hp.c < 0.0 || hp.c >= 0.5)
    throw DomainError("associated_from_params: need c in [0, 1/2)");
  double h2 = hp.h * hp.h;
  double num = (1.0 - h2) * (1.0 - h2) * hp.c * hp.c + h2;
  double S = num / ((1.0 + h2) * (1.0 + h2));
  if (S <= 0.0)
    throw DomainError("associated_from_params: degenerate (h, c) = (0, 0)");
  if (S >= 0.25)
    throw DomainError("associated_from_params: parameters outside the family");
  AssociatedParams ap;
  ap.beta = std::asin(2.0 * std::sqrt(S));
  double ct = hp.c * (1.0 - h2) / std::sqrt(num);
  double st = hp.h / ((1.0 + h2) * std::sqrt(S));
  ap.theta = std::atan2(st, ct);
  return ap;
}

std::pair<double, double> conjugate_pitches(double beta) {
  if (beta <= 0.0 || beta >= kPi / 2)
    throw DomainError("conjugate_pitches: beta must lie in (0, pi/2)");
  return {std::tan(0.5 * beta), 1.0 / std::tan(0.5 * beta)};
}

PullbackReport isometry_pullback(double beta, double h) {
  auto [hm, hp] = conjugate_pitches(beta);
  int sign;
  if (std::abs(h - hm) < 1e-9)
    sign = +1;
  else if (std::abs(h - hp) < 1e-9)
    sign = -1;
  else
    throw PitchMismatchError(
        "isometry_pullback: h is not a conjugate pitch for beta");
  double cb = std::cos(beta), h2 = h * h;
  PullbackReport rep;
  rep.shift_sign = sign;
  const int n = 720;
  for (int i = 0; i <= n; ++i) {
    double s = -kPi + 2.0 * kPi * i / double(n);
    double ss = s + sign * kPi / 4;
    double cs = std::cos(ss), sn = std::sin(ss);
    double hel_tt = (h2 * cs * cs + sn * sn) / (1.0 + h2);
    double cat_tt = 0.5 * (1.0 + cb * std::sin(2.0 * s));
    rep.max_mismatch = std::max(rep.max_mismatch, std::abs(hel_tt - cat_tt));
  }
  return rep;
}

IsothermalForms isothermal_forms(const AssociatedParams& ap) {
  if (ap.beta <= 0.0 || ap.beta > kPi / 2)
    throw DomainError("isothermal_forms: beta must lie in (0, pi/2]");
  if (ap.theta < 0.0 || ap.theta > kPi)
    throw DomainError("isothermal_forms: theta must lie in [0, pi]");
  IsothermalForms f;
  f.beta = ap.beta;
  f.theta = ap.theta;
  double sb = std::sin(ap.beta);
  f.sxx = 0.5 * sb * std::cos(ap.theta);
  f.sxy = 0.5 * sb * std::sin(ap.theta);
  f.syy = -f.sxx;
  double cb = std::cos(ap.beta);
  f.conformal_factor = [cb](double s) {
    return 0.5 * (1.0 + cb * std::sin(2.0 * s));
  };
  return f;
}

AssociationReport verify_association(const AssociatedParams& ap) {
  AssociationReport rep;
  rep.hp = params_from_associated(ap);
  const double h = rep.hp.h, c = rep.hp.c;
  const double h2 = h * h;
  auto iso = isothermal_forms(ap);

  // Height range of the profile of Hel_c^h (turning points of z^2 - z^4 - c^2).
  double zlo, zhi;
  if (c > 0.0) {
    double r = std::sqrt(1.0 - 4.0 * c * c);
    zlo = std::sqrt(0.5 * (1.0 - r));
    zhi = std::sqrt(0.5 * (1.0 + r));
  } else {
    zlo = 1e-3;
    zhi = 1.0 - 1e-3;
  }
  auto prof = make_minimal_helicoidal(h, c);
  const int n = 400;
  const double sgn = (h < 1.0) ? 1.0 : -1.0;
  for (int i = 1; i < n; ++i) {
    double z = zlo + (zhi - zlo) * i / double(n);
    auto mv = eval_momentum_raw(prof, z);
    auto forms = closed_forms_at_height(h, z, mv.K, mv.dK);
    double den = std::sqrt(h2 + (1.0 - h2) * z * z) *
                 std::sqrt(c * c * h2 + z * z * z * z);
    double xs = sgn * std::sqrt(1.0 + h2) * z * z / den;
    double ys = sgn * h * c * std::sqrt(1.0 + h2) / den;
    double yt = sgn * std::sqrt(1.0 + h2);
    double rr = ys / yt;
    auto to_xy = [&](double a11, double a12, double a22, double& xx,
                     double& xy, double& yy) {
      xx = (a11 - 2.0 * rr * a12 + rr * rr * a22) / (xs * xs);
      xy = (a12 - rr * a22) / (xs * yt);
      yy = a22 / (yt * yt);
    };
    double gxx, gxy, gyy, sxx, sxy, syy;
    to_xy(forms.g11, forms.g12, forms.g22, gxx, gxy, gyy);
    to_xy(forms.s11, forms.s12, forms.s22, sxx, sxy, syy);
    double zt2 = ((1.0 - h2) * z * z + h2) / (1.0 + h2);
    rep.first_form_mismatch =
        std::max({rep.first_form_mismatch, std::abs(gxx - zt2),
                  std::abs(gyy - zt2), std::abs(gxy)});
    rep.second_form_mismatch =
        std::max({rep.second_form_mismatch, std::abs(sxx - iso.sxx),
                  std::abs(sxy - iso.sxy), std::abs(syy - iso.syy)});
  }
  return rep;
}

}  // namespace helisphere
