#include "helisphere/families.hpp"

#include <cmath>

namespace helisphere {

namespace {
const double kPi = 3.14159265358979323846;
}

CatenaryParams make_catenary_params(double beta) {
  if (beta <= 0.0 || beta >= kPi / 2)
    throw DomainError("catenary: beta must lie in (0, pi/2)");
  return {beta, 0.5 * std::sin(beta)};
}

double unwrapped_atan_tan(double a, double b, double d, double u) {
  double n = std::round(u / kPi);
  double ur = u - n * kPi;
  double branch = (d == 0.0) ? 0.0 : (b / d > 0 ? 1.0 : -1.0);
  return std::atan((a + b * std::tan(ur)) / d) + n * kPi * branch;
}

ProfileCurve great_circle(double theta) {
  if (theta <= 0.0 || theta >= kPi)
    throw DomainError("great_circle: theta must lie in (0, pi)");
  const double m = std::cos(theta), st = std::sin(theta);
  ProfileCurve curve;
  curve.momentum = make_constant(-m);
  curve.s_begin = 1e-6;
  curve.s_end = kPi - 1e-6;
  curve.state = [m, st](double s) -> std::array<double, 4> {
    double z = st * std::sin(s);
    double dz = st * std::cos(s);
    double lam = unwrapped_atan_tan(0.0, m, 1.0, s);
    double c = std::cos(s), ss = std::sin(s);
    double dlam = m / (c * c + m * m * ss * ss);
    if (m == 0.0) lam = dlam = 0.0;
    return {z, dz, lam, dlam};
  };
  curve.turning_points.push_back(kPi / 2);
  resample_curve(curve, 1000);
  return curve;
}

ProfileCurve parallel(double phi0) {
  if (phi0 <= 0.0 || phi0 >= kPi / 2)
    throw DomainError("parallel: phi0 must lie in (0, pi/2)");
  const double z0 = std::sin(phi0), cp = std::cos(phi0);
  ProfileCurve curve;
  curve.momentum = make_constant(-cp);
  curve.constant_z = true;
  curve.s_begin = 0.0;
  curve.s_end = 2.0 * kPi * cp;  // one full turn
  curve.state = [z0, cp](double s) -> std::array<double, 4> {
    return {z0, 0.0, s / cp, 1.0 / cp};
  };
  resample_curve(curve, 1000);
  return curve;
}

ProfileCurve small_circle(const SmallCircleParams& p) {
  const double k0 = p.k0, c = p.c;
  if (k0 <= 0.0) throw DomainError("small_circle: k0 must be > 0");
  const double w2 = 1.0 + k0 * k0;
  if (c * c >= w2) throw DomainError("small_circle: |c| must be < sqrt(1+k0^2)");
  const double w = std::sqrt(w2);
  const double amp = std::sqrt(w2 - c * c);

  // z > 0 requires sin(w s) > c k0 / amp.
  double thr = c * k0 / amp;
  double s_lo, s_hi;
  if (thr <= -1.0) {
    s_lo = 0.0;
    s_hi = 2.0 * kPi / w;
  } else if (thr >= 1.0) {
    throw DomainError("small_circle: circle does not reach z > 0");
  } else {
    double u0 = std::asin(thr);
    s_lo = u0 / w + 1e-6;
    s_hi = (kPi - u0) / w - 1e-6;
    if (s_hi <= s_lo)
      throw DomainError("small_circle: circle does not reach z > 0");
  }

  ProfileCurve curve;
  curve.momentum = make_linear(k0, c);
  curve.s_begin = s_lo;
  curve.s_end = s_hi;
  curve.state = [k0, c, w, w2, amp](double s) -> std::array<double, 4> {
    double z = (amp * std::sin(w * s) - c * k0) / w2;
    double dz = amp * std::cos(w * s) / w;
    double u = 0.5 * w * s;
    double lam;
    if (c == k0) {
      lam = unwrapped_atan_tan(1.0, -(1.0 + 2.0 * k0 * k0), 2.0 * k0 * w, u);
    } else if (c == -k0) {
      lam = unwrapped_atan_tan(1.0, 1.0 + 2.0 * k0 * k0, 2.0 * k0 * w, u);
    } else {
      lam = unwrapped_atan_tan(amp, 1.0 - c * k0 + k0 * k0, (k0 - c) * w, u) +
            unwrapped_atan_tan(amp, -(1.0 + c * k0 + k0 * k0), (k0 + c) * w, u);
    }
    double K = k0 * z + c;
    double dlam = K / (z * z - 1.0);
    return {z, dz, lam, dlam};
  };
  // dz = 0 at w s = pi/2 (+ k pi); record the ones inside the range.
  for (int k = -4; k <= 4; ++k) {
    double st = (kPi / 2 + k * kPi) / w;
    if (st > s_lo && st < s_hi) curve.turning_points.push_back(st);
  }
  resample_curve(curve, 1000);
  return curve;
}

namespace {

double catenary_dlambda(double beta, double t) {
  // 1 -+ cos(beta) sin(2t) in half-angle form; the naive expression loses
  // 1 - cos(beta) to roundoff near the spike at t = pi/4 for small beta.
  double cb = std::cos(beta), sb = std::sin(beta);
  double sh = std::sin(0.5 * beta);
  double sv = std::sin(t - kPi / 4), cv = std::cos(t - kPi / 4);
  double onem = 2.0 * sh * sh + 2.0 * cb * sv * sv;
  double onep = 2.0 * sh * sh + 2.0 * cb * cv * cv;
  return std::sqrt(2.0) * sb / (onem * std::sqrt(onep));
}

}  // namespace

ProfileCurve catenary(const CatenaryParams& p, double s_begin, double s_end) {
  if (p.beta <= 0.0 || p.beta >= kPi / 2)
    throw DomainError("catenary: beta must lie in (0, pi/2)");
  if (!(s_end > s_begin)) throw DomainError("catenary: empty s interval");
  const double beta = p.beta, cb = std::cos(p.beta);

  // Longitude knots: cumulative quadrature anchored at lambda(0) = 0.
  double lo = std::min(0.0, s_begin), hi = std::max(0.0, s_end);
  std::size_t nint = std::max<std::size_t>(64, (std::size_t)((hi - lo) / 0.02));
  auto grid = std::make_shared<std::vector<double>>();
  auto cum = std::make_shared<std::vector<double>>();
  grid->reserve(nint + 1);
  cum->reserve(nint + 1);
  for (std::size_t i = 0; i <= nint; ++i)
    grid->push_back(lo + (hi - lo) * double(i) / double(nint));
  double acc = 0.0;
  std::size_t i0 = 0;
  // Shift so that the accumulated value vanishes at s = 0.
  for (std::size_t i = 0; i <= nint; ++i) cum->push_back(0.0);
  for (std::size_t i = 0; i + 1 <= nint; ++i) {
    acc += gk15([beta](double t) { return catenary_dlambda(beta, t); },
                (*grid)[i], (*grid)[i + 1])
               .first;
    (*cum)[i + 1] = acc;
  }
  i0 = grid_interval(*grid, 0.0);
  double lam0 = (*cum)[i0] +
                gk15([beta](double t) { return catenary_dlambda(beta, t); },
                     (*grid)[i0], 0.0)
                    .first;

  ProfileCurve curve;
  curve.momentum = make_catenary(p.c);
  curve.s_begin = s_begin;
  curve.s_end = s_end;
  curve.z_period = kPi;
  curve.state = [beta, cb, grid, cum, lam0](double s) -> std::array<double, 4> {
    double z = std::sqrt(0.5 * (1.0 + cb * std::sin(2.0 * s)));
    double dz = 0.5 * cb * std::cos(2.0 * s) / z;
    std::size_t i = grid_interval(*grid, s);
    double lam = (*cum)[i] +
                 gk15([beta](double t) { return catenary_dlambda(beta, t); },
                      (*grid)[i], s)
                     .first -
                 lam0;
    return {z, dz, lam, catenary_dlambda(beta, s)};
  };
  // dz = 0 at s = pi/4 + k pi/2.
  double first = std::ceil((s_begin - kPi / 4) / (kPi / 2)) * (kPi / 2) + kPi / 4;
  for (double st = first; st < s_end; st += kPi / 2)
    if (st > s_begin) curve.turning_points.push_back(st);
  resample_curve(curve, 1000);
  return curve;
}

double closure_function(double beta) {
  if (beta <= 0.0 || beta >= kPi / 2)
    throw DomainError("closure_function: beta must lie in (0, pi/2)");
  double v = integrate([beta](double t) { return catenary_dlambda(beta, t); },
                       0.0, kPi);
  return v / (2.0 * kPi);
}

CatenaryParams solve_beta_for_rotation(double q) {
  const double qmax = std::sqrt(2.0) / 2.0;
  if (q <= 0.5 || q >= qmax)
    throw RangeError("solve_beta_for_rotation: q must lie in (1/2, sqrt(2)/2)");
  double lo = 1e-9, hi = kPi / 2 - 1e-9;
  auto f = [q](double b) { return closure_function(b) - q; };
  if (f(lo) >= 0.0 || f(hi) <= 0.0)
    throw ConvergenceError("solve_beta_for_rotation: q not bracketed");
  double beta = brent(f, lo, hi, 1e-15);
  if (std::abs(closure_function(beta) - q) > 1e-10)
    throw ConvergenceError("solve_beta_for_rotation: root refinement failed");
  return make_catenary_params(beta);
}

}  // namespace helisphere
