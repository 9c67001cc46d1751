#pragma once
#include <array>
#include <cmath>
#include <cstddef>
#include <functional>
#include <vector>

#include "helisphere/errors.hpp"

namespace helisphere {

// ---------------------------------------------------------------------------
// Adaptive Gauss-Kronrod (G7,K15) quadrature.
// ---------------------------------------------------------------------------

struct QuadOptions {
  double rtol = 1e-12;
  double atol = 1e-14;
  int max_depth = 40;
};

// Non-adaptive K15 estimate on [a,b]; also returns the G7 estimate for the
// error gauge.
std::pair<double, double> gk15(const std::function<double(double)>& f,
                               double a, double b);

double integrate(const std::function<double(double)>& f, double a, double b,
                 const QuadOptions& opt = {});

// ---------------------------------------------------------------------------
// Root finding.
// ---------------------------------------------------------------------------

// Brent's method on a bracketing interval [a,b] with f(a)*f(b) <= 0.
double brent(const std::function<double(double)>& f, double a, double b,
             double xtol = 1e-14, int max_iter = 200);

// ---------------------------------------------------------------------------
// Interpolation helpers.
// ---------------------------------------------------------------------------

// Two-point quintic Hermite: matches value, first and second derivative at
// both ends of [s0,s1].
double quintic_hermite(double s0, double s1, double f0, double d0, double a0,
                       double f1, double d1, double a1, double s);
double quintic_hermite_d(double s0, double s1, double f0, double d0, double a0,
                         double f1, double d1, double a1, double s);

// Monotonicity-preserving C1 slopes (Fritsch-Carlson) for data (x_i, y_i).
std::vector<double> pchip_slopes(const std::vector<double>& x,
                                 const std::vector<double>& y);

// Cubic Hermite on a sorted grid; returns value and derivative.
std::pair<double, double> cubic_hermite_eval(const std::vector<double>& x,
                                             const std::vector<double>& y,
                                             const std::vector<double>& m,
                                             double xq);

// Index i with x[i] <= xq <= x[i+1] (clamped to the grid ends).
std::size_t grid_interval(const std::vector<double>& x, double xq);

// ---------------------------------------------------------------------------
// Adaptive explicit Runge-Kutta (Dormand-Prince 5(4)).
// ---------------------------------------------------------------------------

struct OdeOptions {
  double rtol = 1e-10;
  double atol = 1e-12;
  double max_step = 0.05;
  double initial_step = 1e-4;
  std::size_t max_steps = 2000000;
};

// Integrates y' = f(s, y) from s0 to s1 (s1 > s0 or s1 < s0).  For every
// accepted step calls observer(s, y, f(s,y)).  The observer is also called
// once at the initial point.
template <std::size_t N>
void ode_integrate(
    const std::function<std::array<double, N>(double, const std::array<double, N>&)>& f,
    std::array<double, N> y, double s0, double s1, const OdeOptions& opt,
    const std::function<void(double, const std::array<double, N>&,
                             const std::array<double, N>&)>& observer) {
  static const double c2 = 1.0 / 5, c3 = 3.0 / 10, c4 = 4.0 / 5, c5 = 8.0 / 9;
  static const double a21 = 1.0 / 5;
  static const double a31 = 3.0 / 40, a32 = 9.0 / 40;
  static const double a41 = 44.0 / 45, a42 = -56.0 / 15, a43 = 32.0 / 9;
  static const double a51 = 19372.0 / 6561, a52 = -25360.0 / 2187,
                      a53 = 64448.0 / 6561, a54 = -212.0 / 729;
  static const double a61 = 9017.0 / 3168, a62 = -355.0 / 33,
                      a63 = 46732.0 / 5247, a64 = 49.0 / 176,
                      a65 = -5103.0 / 18656;
  static const double b1 = 35.0 / 384, b3 = 500.0 / 1113, b4 = 125.0 / 192,
                      b5 = -2187.0 / 6784, b6 = 11.0 / 84;
  static const double e1 = 71.0 / 57600, e3 = -71.0 / 16695, e4 = 71.0 / 1920,
                      e5 = -17253.0 / 339200, e6 = 22.0 / 525, e7 = -1.0 / 40;

  const double dir = (s1 >= s0) ? 1.0 : -1.0;
  double s = s0;
  std::array<double, N> k1 = f(s, y);
  observer(s, y, k1);
  double h = std::min(opt.initial_step, opt.max_step) * dir;
  std::size_t nsteps = 0;
  while (dir * (s1 - s) > 1e-15 * std::max(1.0, std::abs(s1))) {
    if (++nsteps > opt.max_steps)
      throw ToleranceError("ode_integrate: step limit exceeded");
    if (dir * (s + h - s1) > 0) h = s1 - s;
    std::array<double, N> yt, k2, k3, k4, k5, k6, k7, ynew;
    for (std::size_t i = 0; i < N; ++i) yt[i] = y[i] + h * a21 * k1[i];
    k2 = f(s + c2 * h, yt);
    for (std::size_t i = 0; i < N; ++i)
      yt[i] = y[i] + h * (a31 * k1[i] + a32 * k2[i]);
    k3 = f(s + c3 * h, yt);
    for (std::size_t i = 0; i < N; ++i)
      yt[i] = y[i] + h * (a41 * k1[i] + a42 * k2[i] + a43 * k3[i]);
    k4 = f(s + c4 * h, yt);
    for (std::size_t i = 0; i < N; ++i)
      yt[i] = y[i] + h * (a51 * k1[i] + a52 * k2[i] + a53 * k3[i] + a54 * k4[i]);
    k5 = f(s + c5 * h, yt);
    for (std::size_t i = 0; i < N; ++i)
      yt[i] = y[i] + h * (a61 * k1[i] + a62 * k2[i] + a63 * k3[i] +
                          a64 * k4[i] + a65 * k5[i]);
    k6 = f(s + h, yt);
    for (std::size_t i = 0; i < N; ++i)
      ynew[i] = y[i] + h * (b1 * k1[i] + b3 * k3[i] + b4 * k4[i] +
                            b5 * k5[i] + b6 * k6[i]);
    k7 = f(s + h, ynew);
    double err = 0.0;
    for (std::size_t i = 0; i < N; ++i) {
      double ei = h * (e1 * k1[i] + e3 * k3[i] + e4 * k4[i] + e5 * k5[i] +
                       e6 * k6[i] + e7 * k7[i]);
      double sc = opt.atol + opt.rtol * std::max(std::abs(y[i]), std::abs(ynew[i]));
      double r = ei / sc;
      err += r * r;
    }
    err = std::sqrt(err / N);
    if (err <= 1.0) {
      s += h;
      y = ynew;
      k1 = k7;
      observer(s, y, k1);
    }
    double fac = 0.9 * std::pow(std::max(err, 1e-16), -0.2);
    fac = std::min(5.0, std::max(0.2, fac));
    h *= fac;
    if (std::abs(h) > opt.max_step) h = opt.max_step * dir;
    if (std::abs(h) < 1e-15)
      throw ToleranceError("ode_integrate: step size underflow");
  }
}

// Central differences with one Richardson pass: O(step^4) first derivative,
// O(step^2..4) second derivative of a scalar function.
double fd_derivative(const std::function<double(double)>& f, double x,
                     double step);
double fd_second_derivative(const std::function<double(double)>& f, double x,
                            double step);

}  // namespace helisphere
