#include "helisphere/oracles.hpp"

#include <cmath>
#include <vector>

#include "helisphere/errors.hpp"
#include "helisphere/families.hpp"
#include "helisphere/numerics.hpp"

namespace helisphere {

namespace {

using Vec4 = std::array<double, 4>;

double dot4(const Vec4& a, const Vec4& b) {
  return a[0] * b[0] + a[1] * b[1] + a[2] * b[2] + a[3] * b[3];
}

double det3(double a00, double a01, double a02, double a10, double a11,
            double a12, double a20, double a21, double a22) {
  return a00 * (a11 * a22 - a12 * a21) - a01 * (a10 * a22 - a12 * a20) +
         a02 * (a10 * a21 - a11 * a20);
}

// d with det[a; b; c; d] >= 0: cofactor expansion along the last row.
Vec4 cross4(const Vec4& a, const Vec4& b, const Vec4& c) {
  Vec4 d;
  d[0] = -det3(a[1], a[2], a[3], b[1], b[2], b[3], c[1], c[2], c[3]);
  d[1] = det3(a[0], a[2], a[3], b[0], b[2], b[3], c[0], c[2], c[3]);
  d[2] = -det3(a[0], a[1], a[3], b[0], b[1], b[3], c[0], c[1], c[3]);
  d[3] = det3(a[0], a[1], a[2], b[0], b[1], b[2], c[0], c[1], c[2]);
  return d;
}

Vec4 axpy(double sa, const Vec4& a, double sb, const Vec4& b) {
  Vec4 r;
  for (int i = 0; i < 4; ++i) r[i] = sa * a[i] + sb * b[i];
  return r;
}

}  // namespace

FormsAtPoint fd_forms(const HelicoidalSurface& surf, double s, double t,
                      double step) {
  if (!(step >= 1e-6 && step <= 1e-3))
    throw DomainError("fd_forms: step out of range");
  auto X = [&](double a, double b) { return immerse(surf, a, b); };

  auto d1 = [&](bool in_s, double a) {
    Vec4 p = in_s ? X(s + a, t) : X(s, t + a);
    Vec4 m = in_s ? X(s - a, t) : X(s, t - a);
    return axpy(1.0 / (2.0 * a), p, -1.0 / (2.0 * a), m);
  };
  auto d2 = [&](bool in_s, double a) {
    Vec4 p = in_s ? X(s + a, t) : X(s, t + a);
    Vec4 m = in_s ? X(s - a, t) : X(s, t - a);
    Vec4 o = X(s, t);
    Vec4 r = axpy(1.0, p, 1.0, m);
    return axpy(1.0 / (a * a), r, -2.0 / (a * a), o);
  };
  auto dmix = [&](double a) {
    Vec4 pp = X(s + a, t + a), pm = X(s + a, t - a);
    Vec4 mp = X(s - a, t + a), mm = X(s - a, t - a);
    Vec4 r = axpy(1.0, pp, -1.0, pm);
    r = axpy(1.0, r, -1.0, mp);
    r = axpy(1.0, r, 1.0, mm);
    return axpy(1.0 / (4.0 * a * a), r, 0.0, r);
  };
  auto richardson = [](const Vec4& coarse, const Vec4& fine) {
    return axpy(4.0 / 3.0, fine, -1.0 / 3.0, coarse);
  };

  Vec4 Xs = richardson(d1(true, step), d1(true, 0.5 * step));
  Vec4 Xt = richardson(d1(false, step), d1(false, 0.5 * step));
  Vec4 Xss = richardson(d2(true, step), d2(true, 0.5 * step));
  Vec4 Xtt = richardson(d2(false, step), d2(false, 0.5 * step));
  Vec4 Xst = richardson(dmix(step), dmix(0.5 * step));

  Vec4 p = X(s, t);
  Vec4 nu = cross4(p, Xs, Xt);
  double nn = std::sqrt(dot4(nu, nu));
  if (nn < 1e-14) throw DegenerateError("fd_forms: degenerate tangent plane");
  for (auto& v : nu) v /= nn;
  // Same orientation as the closed-form normal.
  if (dot4(nu, unit_normal(surf, s, t)) < 0.0)
    for (auto& v : nu) v = -v;

  FormsAtPoint f;
  f.g11 = dot4(Xs, Xs);
  f.g12 = dot4(Xs, Xt);
  f.g22 = dot4(Xt, Xt);
  f.s11 = dot4(Xss, nu);
  f.s12 = dot4(Xst, nu);
  f.s22 = dot4(Xtt, nu);
  double det = f.g11 * f.g22 - f.g12 * f.g12;
  if (det < 1e-20) throw DegenerateError("fd_forms: degenerate metric");
  f.alpha = std::sqrt(det);
  f.H = (f.g22 * f.s11 - 2.0 * f.g12 * f.s12 + f.g11 * f.s22) / (2.0 * det);
  f.K_ext = (f.s11 * f.s22 - f.s12 * f.s12) / det;
  f.K_G = 1.0 + f.K_ext;
  return f;
}

double intrinsic_gauss(const HelicoidalSurface& surf, double s, double) {
  // Metric (E, F, G) = (1, g12(s), g22(s)); Brioschi collapses to
  // K = (-G''(G - F^2)/2 - F'G'F/2 + G'^2/4) / (G - F^2)^2.
  auto F = [&](double u) { return first_form(surf, u)[1]; };
  auto G = [&](double u) { return first_form(surf, u)[2]; };
  const double h = 1e-3;
  double Fp = fd_derivative(F, s, h);
  double Gp = fd_derivative(G, s, h);
  double Gpp = fd_second_derivative(G, s, h);
  double Fv = F(s), Gv = G(s);
  double det = Gv - Fv * Fv;
  if (det < 1e-20) throw DegenerateError("intrinsic_gauss: degenerate metric");
  return (-0.5 * Gpp * det - 0.5 * Fp * Gp * Fv + 0.25 * Gp * Gp) /
         (det * det);
}

OtsukiReport otsuki_check(double h0, double span) {
  const double inv_sqrt2 = 0.70710678118654752440;
  if (!(h0 > 0.0 && h0 <= inv_sqrt2))
    throw DomainError("otsuki_check: need 0 < h0 <= 1/sqrt(2)");
  if (!(span > 0.0)) throw DomainError("otsuki_check: need span > 0");

  OtsukiReport rep;
  rep.c = h0 * std::sqrt(1.0 - h0 * h0);
  const double c = rep.c;

  std::function<std::array<double, 2>(double, const std::array<double, 2>&)>
      rhs = [](double, const std::array<double, 2>& y) {
        double h = y[0], w = y[1];
        double omh2 = 1.0 - h * h;
        if (h < 1e-12 || omh2 < 1e-12)
          throw SingularityError("otsuki_check: support function left (0, 1)");
        return std::array<double, 2>{
            w, (omh2 * (1.0 - 2.0 * h * h) - w * w) / (2.0 * h * omh2)};
      };

  std::vector<PosTan> pts;
  std::vector<double> heights;
  double drift = 0.0;
  auto observe = [&](double theta, const std::array<double, 2>& y,
                     const std::array<double, 2>& dy) {
    double h = y[0], w = y[1];
    double omh2 = 1.0 - h * h;
    double first = h * (omh2 - w * w) / std::sqrt(omh2);
    drift = std::max(drift, std::abs(first - c));

    double H2 = 1.0 - h * h - w * w;
    if (H2 <= 0.0) throw SingularityError("otsuki_check: curve left the sphere");
    double He = std::sqrt(H2);
    double ct = std::cos(theta), st = std::sin(theta);
    PosTan pt;
    pt.pos = {h * st + w * ct, w * st - h * ct, He};
    double a = h + dy[1];  // h + h''
    std::array<double, 3> v = {a * ct, a * st, -w * a / He};
    double vn = std::sqrt(v[0] * v[0] + v[1] * v[1] + v[2] * v[2]);
    if (vn < 1e-14)
      throw DegenerateError("otsuki_check: stationary point on the curve");
    pt.tan = {v[0] / vn, v[1] / vn, v[2] / vn};
    pts.push_back(pt);
    heights.push_back(He);
  };

  OdeOptions opt;
  opt.rtol = 1e-12;
  opt.atol = 1e-14;
  opt.max_step = 0.02;
  std::array<double, 2> y = {h0, 0.0};
  ode_integrate<2>(rhs, y, 0.0, span, opt, observe);

  rep.first_integral.name = "otsuki-first-integral";
  rep.first_integral.max_residual = drift;
  rep.first_integral.tolerance = 1e-8;
  rep.first_integral.grid = "accepted steps, theta in [0, span]";
  rep.first_integral.finish();

  auto K = momentum_of_samples(pts);
  double worst = 0.0;
  for (std::size_t i = 0; i < K.size(); ++i)
    worst = std::max(worst, std::abs(K[i] - (-c / heights[i])));
  rep.momentum.name = "otsuki-momentum";
  rep.momentum.max_residual = worst;
  rep.momentum.tolerance = 1e-7;
  rep.momentum.grid = rep.first_integral.grid;
  rep.momentum.finish();
  return rep;
}

CheckReport brendle_kusner_check(double beta, double C) {
  const double kPi = 3.14159265358979323846;
  if (!(beta > 0.0 && beta < kPi / 2))
    throw DomainError("brendle_kusner_check: beta must lie in (0, pi/2)");
  if (C < 0.0) C = std::sin(beta);

  auto curve = catenary(make_catenary_params(beta), -kPi / 4, kPi / 4);
  const int n = 4000;
  const double a = -kPi / 4 + 0.01, b = kPi / 4 - 0.01;
  std::vector<double> r(n + 1), t(n + 1);
  for (int i = 0; i <= n; ++i) {
    double s = a + (b - a) * i / double(n);
    auto st = curve.state(s);
    r[i] = std::sqrt(1.0 - st[0] * st[0]);
    t[i] = st[2];
  }
  // dr/dt by differencing r against t in the common parameter s, with one
  // Richardson pass over the stride.
  double worst = 0.0;
  for (int i = 2; i <= n - 2; ++i) {
    double d1 = (r[i + 1] - r[i - 1]) / (t[i + 1] - t[i - 1]);
    double d2 = (r[i + 2] - r[i - 2]) / (t[i + 2] - t[i - 2]);
    double rp = (4.0 * d1 - d2) / 3.0;
    double r2 = r[i] * r[i], omr2 = 1.0 - r2;
    double lhs = rp * rp / (r2 * r2 * omr2 * omr2) + 1.0 / (r2 * omr2);
    worst = std::max(worst, std::abs(lhs - 4.0 / (C * C)));
  }
  CheckReport rep;
  rep.name = "brendle-kusner";
  rep.max_residual = worst;
  rep.tolerance = 1e-5;
  rep.grid = "4001 uniform s in [-pi/4+0.01, pi/4-0.01]";
  rep.finish();
  return rep;
}

}  // namespace helisphere
