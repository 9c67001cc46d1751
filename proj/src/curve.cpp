#include "helisphere/curve.hpp"

#include <algorithm>
#include <cmath>

namespace helisphere {

CurveSample curve_sample_from_state(double s, double z, double dz,
                                    double lambda, double dlambda) {
  double r2 = 1.0 - z * z;
  if (r2 < 1e-24)
    throw SingularityError("curve sample at the pole z = 1");
  double r = std::sqrt(r2);
  double cl = std::cos(lambda), sl = std::sin(lambda);
  CurveSample cs;
  cs.s = s;
  cs.z = z;
  cs.lambda = lambda;
  cs.pos = {r * cl, r * sl, z};
  double radial = -z * dz / r;  // d r / ds
  cs.tan = {radial * cl - r * sl * dlambda, radial * sl + r * cl * dlambda, dz};
  return cs;
}

CurveSample ProfileCurve::at(double s) const {
  auto st = state(s);
  return curve_sample_from_state(s, st[0], st[1], st[2], st[3]);
}

void resample_curve(ProfileCurve& curve, std::size_t n_samples) {
  curve.samples.clear();
  if (n_samples < 2) n_samples = 2;
  curve.samples.reserve(n_samples);
  for (std::size_t i = 0; i < n_samples; ++i) {
    double s = curve.s_begin +
               (curve.s_end - curve.s_begin) * double(i) / double(n_samples - 1);
    curve.samples.push_back(curve.at(s));
  }
}

namespace {

struct Knots {
  std::vector<double> s, z, dz, ddz, lam, dlam, ddlam;
};

}  // namespace

ProfileCurve reconstruct_curve(const MomentumProfile& p, double s_begin,
                               double s_end, double z_init, int dz_sign_init,
                               const ReconstructionConfig& cfg) {
  if (z_init < p.z_lo - 1e-12 || z_init > p.z_hi + 1e-12)
    throw DomainError("reconstruct_curve: z_init outside profile domain");
  double Q0 = momentum_Q_raw(p, z_init);
  if (Q0 < -1e-10)
    throw DomainError("reconstruct_curve: K^2 + z^2 > 1 at z_init");
  double w0 = dz_sign_init * std::sqrt(std::max(0.0, Q0));

  auto rhs = [&p](double, const std::array<double, 3>& y) {
    double z = y[0];
    if (z > 1.0 - 1e-12)
      throw SingularityError("reconstruct_curve: orbit reaches the pole z=1");
    auto mv = eval_momentum_raw(p, z);
    return std::array<double, 3>{y[1], -z - mv.K * mv.dK,
                                 mv.K / (z * z - 1.0)};
  };

  auto knots = std::make_shared<Knots>();
  auto observe = [&](double s, const std::array<double, 3>& y,
                     const std::array<double, 3>& dy) {
    double z = y[0], w = y[1];
    if (z < p.z_lo - 1e-6 || z > p.z_hi + 1e-6) {
      double zb = std::min(std::max(z, p.z_lo), p.z_hi);
      if (momentum_Q_raw(p, zb) > 1e-8)
        throw DomainError("reconstruct_curve: trajectory left the profile domain");
    }
    auto mv = eval_momentum_raw(p, z);
    double den = z * z - 1.0;
    knots->s.push_back(s);
    knots->z.push_back(z);
    knots->dz.push_back(w);
    knots->ddz.push_back(dy[1]);
    knots->lam.push_back(y[2]);
    knots->dlam.push_back(dy[2]);
    knots->ddlam.push_back(w * (mv.dK * den - 2.0 * z * mv.K) / (den * den));
  };

  OdeOptions opt;
  opt.rtol = cfg.rtol;
  opt.atol = cfg.atol;
  opt.max_step = cfg.max_step;
  ode_integrate<3>(rhs, {z_init, w0, 0.0}, s_begin, s_end, opt, observe);

  bool reversed = s_end < s_begin;
  if (reversed) {
    auto rev = [](std::vector<double>& v) { std::reverse(v.begin(), v.end()); };
    rev(knots->s);
    rev(knots->z);
    rev(knots->dz);
    rev(knots->ddz);
    rev(knots->lam);
    rev(knots->dlam);
    rev(knots->ddlam);
  }

  ProfileCurve curve;
  curve.momentum = p;
  curve.s_begin = std::min(s_begin, s_end);
  curve.s_end = std::max(s_begin, s_end);
  const MomentumProfile prof = p;
  curve.state = [knots, prof](double s) -> std::array<double, 4> {
    const auto& k = *knots;
    std::size_t i = grid_interval(k.s, s);
    double z = quintic_hermite(k.s[i], k.s[i + 1], k.z[i], k.dz[i], k.ddz[i],
                               k.z[i + 1], k.dz[i + 1], k.ddz[i + 1], s);
    double dz = quintic_hermite_d(k.s[i], k.s[i + 1], k.z[i], k.dz[i],
                                  k.ddz[i], k.z[i + 1], k.dz[i + 1],
                                  k.ddz[i + 1], s);
    double lam = quintic_hermite(k.s[i], k.s[i + 1], k.lam[i], k.dlam[i],
                                 k.ddlam[i], k.lam[i + 1], k.dlam[i + 1],
                                 k.ddlam[i + 1], s);
    double dlam = eval_momentum_raw(prof, z).K / (z * z - 1.0);
    return {z, dz, lam, dlam};
  };

  // Turning points: sign changes of dz between knots.
  for (std::size_t i = 0; i + 1 < knots->s.size(); ++i) {
    double w0k = knots->dz[i], w1k = knots->dz[i + 1];
    if (w0k == 0.0) {
      curve.turning_points.push_back(knots->s[i]);
    } else if (w0k * w1k < 0.0) {
      double sroot = brent(
          [&](double s) { return curve.state(s)[1]; }, knots->s[i],
          knots->s[i + 1]);
      curve.turning_points.push_back(sroot);
    }
  }

  try {
    auto info = z_period_and_rotation(p);
    if (info.oscillates) curve.z_period = info.S;
  } catch (const SingularityError&) {
  } catch (const ToleranceError&) {
    // z_period is optional metadata; keep the curve if the period quadrature
    // cannot meet tolerance for this profile.
  }

  resample_curve(curve, cfg.n_samples);
  return curve;
}

std::vector<double> momentum_of_samples(const std::vector<PosTan>& pts) {
  std::vector<double> out;
  out.reserve(pts.size());
  for (const auto& pt : pts) {
    auto n2 = [](const std::array<double, 3>& v) {
      return v[0] * v[0] + v[1] * v[1] + v[2] * v[2];
    };
    if (std::abs(n2(pt.pos) - 1.0) > 2e-6 || std::abs(n2(pt.tan) - 1.0) > 2e-6)
      throw GeometryError("momentum_of_samples: samples not unit vectors");
    out.push_back(pt.tan[0] * pt.pos[1] - pt.pos[0] * pt.tan[1]);
  }
  return out;
}

std::vector<double> momentum_of_samples(const std::vector<CurveSample>& pts) {
  std::vector<PosTan> v;
  v.reserve(pts.size());
  for (const auto& p : pts) v.push_back({p.pos, p.tan});
  return momentum_of_samples(v);
}

}  // namespace helisphere
