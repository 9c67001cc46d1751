#include "helisphere/numerics.hpp"

#include <algorithm>
#include <cmath>

namespace helisphere {

namespace {

// 15-point Kronrod abscissae (positive half) and weights; the embedded
// 7-point Gauss rule lives on the odd-indexed nodes.
const double kx[8] = {
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144838258730,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.000000000000000000000000000000000};
const double kw[8] = {
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714};
const double gw[4] = {
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327};

}  // namespace

std::pair<double, double> gk15(const std::function<double(double)>& f,
                               double a, double b) {
  double hc = 0.5 * (b - a), mid = 0.5 * (a + b);
  double resk = 0.0, resg = 0.0;
  for (int i = 0; i < 8; ++i) {
    double fv;
    if (i == 7) {
      fv = f(mid);
      resk += kw[i] * fv;
      resg += gw[3] * fv;
    } else {
      double f1 = f(mid - hc * kx[i]);
      double f2 = f(mid + hc * kx[i]);
      resk += kw[i] * (f1 + f2);
      if (i % 2 == 1) resg += gw[i / 2] * (f1 + f2);
    }
  }
  return {resk * hc, resg * hc};
}

double integrate(const std::function<double(double)>& f, double a, double b,
                 const QuadOptions& opt) {
  if (a == b) return 0.0;
  // Globally adaptive: split whichever segment carries the largest error
  // until the summed error estimate meets tolerance.  Handles narrow spikes
  // (closure integrand at small beta) that defeat depth-halving schemes.
  struct Seg {
    double a, b, k, err;
  };
  auto make = [&](double x, double y) {
    auto [k, g] = gk15(f, x, y);
    double diff = std::abs(k - g);
    return Seg{x, y, k, std::min(diff, std::pow(200.0 * diff, 1.5))};
  };
  std::vector<Seg> segs{make(a, b)};
  const double minw = std::abs(b - a) * std::ldexp(1.0, -opt.max_depth);
  const std::size_t max_segs = 4096;
  while (true) {
    double total = 0.0, errsum = 0.0, worst_err = 0.0;
    std::ptrdiff_t worst = -1;
    for (std::size_t i = 0; i < segs.size(); ++i) {
      total += segs[i].k;
      errsum += segs[i].err;
      if (std::abs(segs[i].b - segs[i].a) > minw && segs[i].err > worst_err) {
        worst_err = segs[i].err;
        worst = std::ptrdiff_t(i);
      }
    }
    double tol = std::max(opt.atol, opt.rtol * std::abs(total));
    if (errsum <= tol) return total;
    if (worst < 0 || segs.size() >= max_segs) {
      if (errsum > 1e3 * tol)
        throw ToleranceError("integrate: failed to converge");
      return total;
    }
    Seg s = segs[std::size_t(worst)];
    double m = 0.5 * (s.a + s.b);
    segs[std::size_t(worst)] = make(s.a, m);
    segs.push_back(make(m, s.b));
  }
}

double brent(const std::function<double(double)>& f, double a, double b,
             double xtol, int max_iter) {
  double fa = f(a), fb = f(b);
  if (fa == 0.0) return a;
  if (fb == 0.0) return b;
  if (fa * fb > 0.0)
    throw ConvergenceError("brent: endpoints do not bracket a root");
  if (std::abs(fa) < std::abs(fb)) {
    std::swap(a, b);
    std::swap(fa, fb);
  }
  double c = a, fc = fa, d = b - a, e = d;
  for (int it = 0; it < max_iter; ++it) {
    if (std::abs(fc) < std::abs(fb)) {
      a = b; b = c; c = a;
      fa = fb; fb = fc; fc = fa;
    }
    double tol1 = 2.0 * 1e-16 * std::abs(b) + 0.5 * xtol;
    double xm = 0.5 * (c - b);
    if (std::abs(xm) <= tol1 || fb == 0.0) return b;
    if (std::abs(e) >= tol1 && std::abs(fa) > std::abs(fb)) {
      double p, q, r, sfac = fb / fa;
      if (a == c) {
        p = 2.0 * xm * sfac;
        q = 1.0 - sfac;
      } else {
        q = fa / fc;
        r = fb / fc;
        p = sfac * (2.0 * xm * q * (q - r) - (b - a) * (r - 1.0));
        q = (q - 1.0) * (r - 1.0) * (sfac - 1.0);
      }
      if (p > 0.0) q = -q;
      p = std::abs(p);
      if (2.0 * p < std::min(3.0 * xm * q - std::abs(tol1 * q), std::abs(e * q))) {
        e = d;
        d = p / q;
      } else {
        d = xm;
        e = d;
      }
    } else {
      d = xm;
      e = d;
    }
    a = b;
    fa = fb;
    b += (std::abs(d) > tol1) ? d : (xm > 0 ? tol1 : -tol1);
    fb = f(b);
    if ((fb > 0) == (fc > 0)) {
      c = a;
      fc = fa;
      e = d = b - a;
    }
  }
  throw ConvergenceError("brent: iteration limit reached");
}

namespace {
struct QuinticCoef {
  double h, f0, d0h, a0h2, A, B, C;
};
QuinticCoef quintic_coef(double s0, double s1, double f0, double d0, double a0,
                         double f1, double d1, double a1) {
  double h = s1 - s0;
  double d0h = d0 * h, d1h = d1 * h;
  double a0h2 = a0 * h * h, a1h2 = a1 * h * h;
  double r0 = f1 - f0 - d0h - 0.5 * a0h2;
  double r1 = d1h - d0h - a0h2;
  double r2 = a1h2 - a0h2;
  return {h, f0, d0h, a0h2,
          10.0 * r0 - 4.0 * r1 + 0.5 * r2,
          -15.0 * r0 + 7.0 * r1 - r2,
          6.0 * r0 - 3.0 * r1 + 0.5 * r2};
}
}  // namespace

double quintic_hermite(double s0, double s1, double f0, double d0, double a0,
                       double f1, double d1, double a1, double s) {
  auto c = quintic_coef(s0, s1, f0, d0, a0, f1, d1, a1);
  double t = (s - s0) / c.h;
  return c.f0 + t * (c.d0h + t * (0.5 * c.a0h2 + t * (c.A + t * (c.B + t * c.C))));
}

double quintic_hermite_d(double s0, double s1, double f0, double d0, double a0,
                         double f1, double d1, double a1, double s) {
  auto c = quintic_coef(s0, s1, f0, d0, a0, f1, d1, a1);
  double t = (s - s0) / c.h;
  double dp = c.d0h + t * (c.a0h2 + t * (3.0 * c.A + t * (4.0 * c.B + t * 5.0 * c.C)));
  return dp / c.h;
}

std::vector<double> pchip_slopes(const std::vector<double>& x,
                                 const std::vector<double>& y) {
  std::size_t n = x.size();
  std::vector<double> m(n, 0.0);
  if (n < 2) return m;
  if (n == 2) {
    m[0] = m[1] = (y[1] - y[0]) / (x[1] - x[0]);
    return m;
  }
  std::vector<double> h(n - 1), del(n - 1);
  for (std::size_t i = 0; i + 1 < n; ++i) {
    h[i] = x[i + 1] - x[i];
    del[i] = (y[i + 1] - y[i]) / h[i];
  }
  for (std::size_t i = 1; i + 1 < n; ++i) {
    if (del[i - 1] * del[i] <= 0.0) {
      m[i] = 0.0;
    } else {
      double w1 = 2.0 * h[i] + h[i - 1];
      double w2 = h[i] + 2.0 * h[i - 1];
      m[i] = (w1 + w2) / (w1 / del[i - 1] + w2 / del[i]);
    }
  }
  auto end_slope = [](double h0, double h1, double d0, double d1) {
    double m0 = ((2.0 * h0 + h1) * d0 - h0 * d1) / (h0 + h1);
    if (m0 * d0 <= 0.0)
      m0 = 0.0;
    else if (d0 * d1 < 0.0 && std::abs(m0) > 3.0 * std::abs(d0))
      m0 = 3.0 * d0;
    return m0;
  };
  m[0] = end_slope(h[0], h[1], del[0], del[1]);
  m[n - 1] = end_slope(h[n - 2], h[n - 3], del[n - 2], del[n - 3]);
  return m;
}

std::size_t grid_interval(const std::vector<double>& x, double xq) {
  auto it = std::upper_bound(x.begin(), x.end(), xq);
  std::size_t i = (it == x.begin()) ? 0 : (std::size_t)(it - x.begin()) - 1;
  if (i + 1 >= x.size()) i = x.size() - 2;
  return i;
}

std::pair<double, double> cubic_hermite_eval(const std::vector<double>& x,
                                             const std::vector<double>& y,
                                             const std::vector<double>& m,
                                             double xq) {
  std::size_t i = grid_interval(x, xq);
  double h = x[i + 1] - x[i];
  double t = (xq - x[i]) / h;
  double t2 = t * t, t3 = t2 * t;
  double h00 = 2 * t3 - 3 * t2 + 1, h10 = t3 - 2 * t2 + t;
  double h01 = -2 * t3 + 3 * t2, h11 = t3 - t2;
  double v = h00 * y[i] + h10 * h * m[i] + h01 * y[i + 1] + h11 * h * m[i + 1];
  double dh00 = 6 * t2 - 6 * t, dh10 = 3 * t2 - 4 * t + 1;
  double dh01 = -6 * t2 + 6 * t, dh11 = 3 * t2 - 2 * t;
  double d = (dh00 * y[i] + dh10 * h * m[i] + dh01 * y[i + 1] +
              dh11 * h * m[i + 1]) / h;
  return {v, d};
}

double fd_derivative(const std::function<double(double)>& f, double x,
                     double step) {
  auto d = [&](double h) { return (f(x + h) - f(x - h)) / (2.0 * h); };
  return (4.0 * d(0.5 * step) - d(step)) / 3.0;
}

double fd_second_derivative(const std::function<double(double)>& f, double x,
                            double step) {
  auto s2 = [&](double h) {
    return (f(x + h) - 2.0 * f(x) + f(x - h)) / (h * h);
  };
  return (4.0 * s2(0.5 * step) - s2(step)) / 3.0;
}

}  // namespace helisphere
