#include "helisphere/prescribe.hpp"

#include <cmath>
#include <memory>
#include <vector>

namespace helisphere {

namespace {

// Cumulative antiderivative Int_{z_lo}^{z} f(t) dt on a fixed grid, with an
// in-cell Kronrod tail for off-grid queries.
struct Antiderivative {
  std::vector<double> grid, cum;
  std::function<double(double)> f;

  Antiderivative(std::function<double(double)> fn, double z_lo, double z_hi,
                 std::size_t ncells)
      : f(std::move(fn)) {
    grid.reserve(ncells + 1);
    cum.reserve(ncells + 1);
    for (std::size_t i = 0; i <= ncells; ++i)
      grid.push_back(z_lo + (z_hi - z_lo) * double(i) / double(ncells));
    cum.push_back(0.0);
    double acc = 0.0;
    for (std::size_t i = 0; i + 1 <= ncells; ++i) {
      acc += integrate(f, grid[i], grid[i + 1]);
      cum.push_back(acc);
    }
  }

  double operator()(double z) const {
    std::size_t i = grid_interval(grid, z);
    return cum[i] + gk15(f, grid[i], z).first;
  }
};

struct KEval {
  bool valid = false;
  double K = 0.0, dK = 0.0;
};

KEval eval_mean_K(double h, const std::function<double(double)>& H,
                  const Antiderivative& I, double cst, int sign, double z) {
  KEval r;
  if (z <= 0.0) return r;
  double h2 = h * h;
  double A = (I(z) + cst) / (z * z);
  double dA = 2.0 * H(z) / z - 2.0 * A / z;
  double g = h2 + (1.0 - h2) * z * z;
  double dg = 2.0 * (1.0 - h2) * z;
  double root = std::sqrt(1.0 + h2 * A * A);
  double K = sign * std::sqrt(g) * A / root;
  double dK = sign * (dg * A / (2.0 * std::sqrt(g) * root) +
                      std::sqrt(g) * dA / (root * root * root));
  r.K = K;
  r.dK = dK;
  r.valid = (K * K + z * z < 1.0);
  return r;
}

KEval eval_ext_K(double h, const std::function<double(double)>& Kext,
                 const Antiderivative& I, double cst, int sign, double z) {
  KEval r;
  if (z <= 0.0) return r;
  double h2 = h * h;
  double B = I(z) + cst;
  double dB = 2.0 * z * Kext(z);
  double den = z * z + h2 * B;
  if (std::abs(den) < 1e-14) return r;
  double G = 1.0 + (1.0 - h2) * z * z * B / den;
  if (G < 0.0) return r;
  double dG = (1.0 - h2) *
              ((2.0 * z * B + z * z * dB) * den -
               z * z * B * (2.0 * z + h2 * dB)) /
              (den * den);
  double K = sign * std::sqrt(G);
  r.K = K;
  r.dK = (std::abs(K) > 1e-14) ? dG / (2.0 * K) : 0.0;
  r.valid = (G + z * z < 1.0);
  return r;
}

PrescriptionResult build_result(
    double z_lo, double z_hi, double cst, int sign,
    const std::function<KEval(double)>& ev) {
  const int n = 1200;
  auto zat = [&](int i) { return z_lo + (z_hi - z_lo) * i / double(n); };
  // Largest contiguous valid run.
  int best_lo = -1, best_hi = -1, run_lo = -1;
  for (int i = 0; i <= n; ++i) {
    bool v = ev(zat(i)).valid;
    if (v && run_lo < 0) run_lo = i;
    if ((!v || i == n) && run_lo >= 0) {
      int run_hi = v ? i : i - 1;
      if (best_lo < 0 || run_hi - run_lo > best_hi - best_lo) {
        best_lo = run_lo;
        best_hi = run_hi;
      }
      run_lo = -1;
    }
  }
  if (best_lo < 0)
    throw EmptyValidityError("prescription: validity interval is empty");
  auto refine = [&](double a, double b, bool want_a_valid) {
    // a valid iff want_a_valid; bisect the validity boundary.
    for (int it = 0; it < 80; ++it) {
      double m = 0.5 * (a + b);
      if (ev(m).valid == want_a_valid)
        a = m;
      else
        b = m;
    }
    return 0.5 * (a + b);
  };
  double vlo = (best_lo == 0) ? z_lo : refine(zat(best_lo), zat(best_lo - 1), true);
  double vhi = (best_hi == n) ? z_hi : refine(zat(best_hi), zat(best_hi + 1), true);

  // Tabulate strictly inside the validity interval.
  const std::size_t m = 1500;
  double margin = 1e-9 * (vhi - vlo);
  std::vector<double> zt, Kt, dKt;
  zt.reserve(m + 1);
  for (std::size_t i = 0; i <= m; ++i) {
    double z = (vlo + margin) + (vhi - vlo - 2 * margin) * double(i) / double(m);
    auto e = ev(z);
    zt.push_back(z);
    Kt.push_back(e.K);
    dKt.push_back(e.dK);
  }
  PrescriptionResult res;
  res.momentum = make_tabulated(std::move(zt), std::move(Kt), std::move(dKt));
  res.integration_constant = cst;
  res.sign = sign;
  res.valid_lo = vlo;
  res.valid_hi = vhi;
  return res;
}

}  // namespace

PrescriptionResult momentum_from_mean(double h,
                                      const std::function<double(double)>& H,
                                      double z_lo, double z_hi, double cst,
                                      int sign) {
  if (h < 0.0) throw DomainError("momentum_from_mean: h must be >= 0");
  if (!(0.0 < z_lo && z_lo < z_hi && z_hi < 1.0))
    throw DomainError("momentum_from_mean: need 0 < z_lo < z_hi < 1");
  auto I = std::make_shared<Antiderivative>(
      [H](double t) { return 2.0 * t * H(t); }, z_lo, z_hi, 1200);
  return build_result(z_lo, z_hi, cst, sign, [=](double z) {
    return eval_mean_K(h, H, *I, cst, sign, z);
  });
}

PrescriptionResult momentum_from_extrinsic(
    double h, const std::function<double(double)>& Kext, double z_lo,
    double z_hi, double cst, int sign) {
  if (h == 1.0)
    throw PitchError("momentum_from_extrinsic: h = 1 forces K_ext = -1");
  if (h < 0.0) throw DomainError("momentum_from_extrinsic: h must be >= 0");
  if (!(0.0 < z_lo && z_lo < z_hi && z_hi < 1.0))
    throw DomainError("momentum_from_extrinsic: need 0 < z_lo < z_hi < 1");
  auto I = std::make_shared<Antiderivative>(
      [Kext](double t) { return 2.0 * t * Kext(t); }, z_lo, z_hi, 1200);
  return build_result(z_lo, z_hi, cst, sign, [=](double z) {
    return eval_ext_K(h, Kext, *I, cst, sign, z);
  });
}

RoundTripReport round_trip_mean(double h, const MomentumProfile& p) {
  double h2 = h * h;
  double z_lo = std::max(p.z_lo, 1e-6);
  double z_hi = std::min(p.z_hi, 1.0 - 1e-12);
  auto mean_of = [&](double z) {
    auto mv = eval_momentum_raw(p, z);
    double a2 = h2 * (1.0 - mv.K * mv.K) + (1.0 - h2) * z * z;
    return 0.5 *
           ((h2 + (1.0 - h2) * z * z) * z * mv.dK +
            (2.0 * h2 * (1.0 - mv.K * mv.K) + (1.0 - h2) * z * z) * mv.K) /
           (a2 * std::sqrt(a2));
  };
  Antiderivative I([&](double t) { return 2.0 * t * mean_of(t); }, z_lo, z_hi,
                   1200);
  double za = 0.5 * (z_lo + z_hi);
  auto mva = eval_momentum_raw(p, za);
  double a2a = h2 * (1.0 - mva.K * mva.K) + (1.0 - h2) * za * za;
  double A_target = mva.K / std::sqrt(a2a);

  RoundTripReport best;
  best.residual = 1e300;
  for (int sign : {+1, -1}) {
    double cst = sign * A_target * za * za - I(za);
    double sup = 0.0;
    const int n = 400;
    for (int i = 1; i < n; ++i) {
      double z = z_lo + (z_hi - z_lo) * i / double(n);
      auto e = eval_mean_K(h, mean_of, I, cst, sign, z);
      sup = std::max(sup, std::abs(e.K - eval_momentum_raw(p, z).K));
    }
    if (sup < best.residual) {
      best.residual = sup;
      best.integration_constant = cst;
      best.sign = sign;
    }
  }
  return best;
}

}  // namespace helisphere
