#include "helisphere/momentum.hpp"

#include <algorithm>
#include <cmath>

namespace helisphere {

namespace {

void check_domain(const MomentumProfile& p, double z) {
  const double slack = 1e-12;
  if (z < p.z_lo - slack || z > p.z_hi + slack)
    throw DomainError("momentum: z outside profile domain");
}

MomentumValue eval_kind(const MomentumKind& kind, double z) {
  if (auto* c = std::get_if<ConstantK>(&kind)) return {c->c, 0.0};
  if (auto* l = std::get_if<LinearK>(&kind)) return {l->k0 * z + l->c, l->k0};
  if (auto* a = std::get_if<CatenaryK>(&kind)) {
    double zz = std::max(z, 1e-14);
    return {-a->c / zz, a->c / (zz * zz)};
  }
  if (auto* m = std::get_if<MinimalHelicoidalK>(&kind)) {
    if (m->c == 0.0) return {0.0, 0.0};
    double h2 = m->h * m->h;
    double g = h2 + (1.0 - h2) * z * z;
    double D = z * z * z * z + h2 * m->c * m->c;
    double sg = std::sqrt(g), sD = std::sqrt(D);
    double K = -m->c * sg / sD;
    double dK = -m->c * ((1.0 - h2) * z / (sg * sD) -
                         2.0 * z * z * z * sg / (D * sD));
    return {K, dK};
  }
  const auto& t = std::get<TabulatedK>(kind);
  double zq = std::min(std::max(z, t.z.front()), t.z.back());
  auto [v, d] = cubic_hermite_eval(t.z, t.K, t.dK, zq);
  return {v, d};
}

}  // namespace

MomentumProfile make_constant(double c) {
  if (std::abs(c) >= 1.0) throw DomainError("make_constant: |c| must be < 1");
  return {ConstantK{c}, 0.0, std::sqrt(1.0 - c * c)};
}

MomentumProfile make_linear(double k0, double c) {
  double disc = 1.0 + k0 * k0 - c * c;
  if (disc <= 0.0)
    throw DomainError("make_linear: |c| must be < sqrt(1+k0^2)");
  double den = 1.0 + k0 * k0;
  double zp = (std::sqrt(disc) - k0 * c) / den;
  double zm = (-std::sqrt(disc) - k0 * c) / den;
  if (zp <= 0.0) throw DomainError("make_linear: profile never reaches z > 0");
  return {LinearK{k0, c}, std::max(0.0, zm), zp};
}

MomentumProfile make_catenary(double c) {
  if (c <= 0.0 || c >= 0.5)
    throw DomainError("make_catenary: c must lie in (0, 1/2)");
  double r = std::sqrt(1.0 - 4.0 * c * c);
  return {CatenaryK{c}, std::sqrt(0.5 * (1.0 - r)), std::sqrt(0.5 * (1.0 + r))};
}

MomentumProfile make_minimal_helicoidal(double h, double c) {
  if (h < 0.0) throw DomainError("make_minimal_helicoidal: h must be >= 0");
  if (c < 0.0 || c >= 0.5)
    throw DomainError("make_minimal_helicoidal: c must lie in [0, 1/2)");
  if (c == 0.0) return {MinimalHelicoidalK{h, c}, 0.0, 1.0};
  double r = std::sqrt(1.0 - 4.0 * c * c);
  return {MinimalHelicoidalK{h, c}, std::sqrt(0.5 * (1.0 - r)),
          std::sqrt(0.5 * (1.0 + r))};
}

MomentumProfile make_tabulated(std::vector<double> z, std::vector<double> K,
                               std::vector<double> dK) {
  if (z.size() < 2 || z.size() != K.size())
    throw DomainError("make_tabulated: need matching z/K samples (>= 2)");
  for (std::size_t i = 0; i + 1 < z.size(); ++i)
    if (!(z[i] < z[i + 1]))
      throw DomainError("make_tabulated: z samples must strictly increase");
  if (dK.empty())
    dK = pchip_slopes(z, K);
  else if (dK.size() != z.size())
    throw DomainError("make_tabulated: dK size mismatch");
  double lo = z.front(), hi = z.back();
  return {TabulatedK{std::move(z), std::move(K), std::move(dK)}, lo, hi};
}

MomentumValue eval_momentum(const MomentumProfile& p, double z) {
  check_domain(p, z);
  return eval_kind(p.kind, z);
}

MomentumValue eval_momentum_raw(const MomentumProfile& p, double z) {
  return eval_kind(p.kind, z);
}

double curvature_from_momentum(const MomentumProfile& p, double z) {
  return eval_momentum(p, z).dK;
}

double momentum_Q(const MomentumProfile& p, double z) {
  double K = eval_momentum(p, z).K;
  return 1.0 - z * z - K * K;
}

double momentum_Q_raw(const MomentumProfile& p, double z) {
  double K = eval_kind(p.kind, z).K;
  return 1.0 - z * z - K * K;
}

namespace {

// Integrates f(z)/sqrt(Q(z)) over [z0,z1] with the substitution z = z* -+ u^2
// on each half, which regularizes the inverse square root at turning points.
double sqrtq_integral(const MomentumProfile& p, double z0, double z1,
                      const std::function<double(double)>& numer) {
  double sgn = 1.0;
  if (z1 < z0) {
    std::swap(z0, z1);
    sgn = -1.0;
  }
  if (z0 == z1) return 0.0;
  double zm = 0.5 * (z0 + z1);
  auto piece = [&](double zend, double sub_sign) {
    // Near a simple turning point Q(zend + u^2) = |Q'(zend)| u^2 + O(u^4);
    // floor the rounding noise in Q with that model so the substituted
    // integrand stays smooth through the endpoint.
    auto mv = eval_momentum_raw(p, zend);
    double slope = std::abs(-2.0 * zend - 2.0 * mv.K * mv.dK);
    return integrate(
        [&](double u) {
          double z = zend + sub_sign * u * u;
          double Q = momentum_Q_raw(p, z);
          if (Q < 1e-12) Q = std::max(Q, slope * u * u);
          if (Q <= 0.0) {
            if (Q > -1e-12)
              Q = 1e-300;
            else
              throw SingularityError(
                  "arc_length_of_height: 1 - z^2 - K^2 < 0 inside interval");
          }
          return 2.0 * u * numer(z) / std::sqrt(Q);
        },
        0.0, std::sqrt(std::abs(zm - zend)));
  };
  return sgn * (piece(z0, 1.0) + piece(z1, -1.0));
}

}  // namespace

double arc_length_of_height(const MomentumProfile& p, double z0, double z1) {
  check_domain(p, z0);
  check_domain(p, z1);
  return sqrtq_integral(p, z0, z1, [](double) { return 1.0; });
}

std::vector<double> turning_heights(const MomentumProfile& p) {
  const int n = 800;
  std::vector<double> roots;
  double prev_z = p.z_lo, prev_q = momentum_Q_raw(p, prev_z);
  for (int i = 1; i <= n; ++i) {
    double z = p.z_lo + (p.z_hi - p.z_lo) * i / n;
    double q = momentum_Q_raw(p, z);
    if ((prev_q <= 0.0 && q > 0.0) || (prev_q > 0.0 && q <= 0.0)) {
      double r = brent([&](double zz) { return momentum_Q_raw(p, zz); },
                       prev_z, z);
      roots.push_back(r);
    }
    prev_z = z;
    prev_q = q;
  }
  // Domain endpoints that are exact turning points (Q = 0 to rounding).
  if (std::abs(momentum_Q_raw(p, p.z_lo)) < 1e-10 &&
      (roots.empty() || std::abs(roots.front() - p.z_lo) > 1e-8))
    roots.insert(roots.begin(), p.z_lo);
  if (std::abs(momentum_Q_raw(p, p.z_hi)) < 1e-10 &&
      (roots.empty() || std::abs(roots.back() - p.z_hi) > 1e-8))
    roots.push_back(p.z_hi);
  return roots;
}

PeriodInfo z_period_and_rotation(const MomentumProfile& p) {
  auto roots = turning_heights(p);
  // Keep turning points strictly inside (0,1): oscillation needs the orbit to
  // stay in the open upper hemisphere away from the pole.
  std::vector<double> inner;
  for (double r : roots)
    if (r > 1e-9 && r < 1.0 - 1e-9) inner.push_back(r);
  PeriodInfo info;
  if (inner.size() < 2) {
    bool any_valid = false;
    for (int i = 0; i <= 200; ++i) {
      double z = p.z_lo + (p.z_hi - p.z_lo) * i / 200.0;
      if (momentum_Q_raw(p, z) > 0.0) any_valid = true;
    }
    if (!any_valid)
      throw SingularityError("z_period_and_rotation: momentum valid nowhere");
    info.oscillates = false;
    return info;
  }
  // Pick the bracketing pair around the Q maximum.
  double zbest = 0.0, qbest = -1.0;
  for (int i = 0; i <= 400; ++i) {
    double z = inner.front() + (inner.back() - inner.front()) * i / 400.0;
    double q = momentum_Q_raw(p, z);
    if (q > qbest) {
      qbest = q;
      zbest = z;
    }
  }
  if (qbest <= 0.0)
    throw SingularityError("z_period_and_rotation: no oscillation band");
  double zlo = inner.front(), zhi = inner.back();
  for (double r : inner) {
    if (r <= zbest) zlo = std::max(zlo, r);
    if (r >= zbest) zhi = std::min(zhi, r);
  }
  info.oscillates = true;
  info.z_minus = zlo;
  info.z_plus = zhi;
  info.S = 2.0 * arc_length_of_height(p, zlo, zhi);
  info.delta_lambda = 2.0 * sqrtq_integral(p, zlo, zhi, [&](double z) {
    return eval_momentum_raw(p, z).K / (z * z - 1.0);
  });
  return info;
}

}  // namespace helisphere
