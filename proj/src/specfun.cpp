#include "primebound/specfun.hpp"

#include <cmath>
#include <numbers>

#include "internal.hpp"

namespace primebound::specfun {

namespace {

// log Gamma(a) for a > 0. Integer and half-integer arguments go through the
// exact product; everything else through std::lgamma.
double log_gamma_pos(double a) {
  double frac = a - std::floor(a);
  if (a < 200.0 && frac == 0.0) {
    detail::Kahan acc;  // log (a-1)!
    for (double k = 2; k < a; ++k) acc.add(std::log(k));
    return acc.sum;
  }
  if (a < 200.0 && frac == 0.5) {
    detail::Kahan acc;  // Gamma(1/2) = sqrt(pi), then ascend
    acc.add(0.5 * std::log(std::numbers::pi));
    for (double k = 0.5; k < a - 0.5; ++k) acc.add(std::log(k));
    return acc.sum;
  }
  return std::lgamma(a);
}

}  // namespace

double bessel_i_scaled(double order, double x) {
  if (order < 0) throw std::domain_error("bessel_i_scaled: negative order");
  if (x < 0) throw std::domain_error("bessel_i_scaled: negative argument");
  if (x == 0) return order == 0 ? 1.0 : 0.0;

  // ascending series with the exp(-x) scale folded into the first term
  double term = std::exp(order * std::log(0.5 * x) - log_gamma_pos(order + 1) - x);
  double q = 0.25 * x * x;
  detail::Kahan acc;
  for (int n = 0; n < 1000; ++n) {
    acc.add(term);
    term *= q / ((n + 1) * (order + n + 1));
    if (term <= 1e-18 * acc.sum) {
      acc.add(term);
      break;
    }
  }
  return acc.sum;
}

double logan_ell(const KernelParams& p, double xi) {
  double z = xi * p.eps;
  double v = z * z - p.c * p.c;
  if (std::fabs(v) < 1e-8 * p.c * p.c) {
    // removable singularity at |xi eps| = c: sin(sqrt(v))/sqrt(v) by series
    double s = 1.0 - v / 6.0 + v * v / 120.0 - v * v * v / 5040.0;
    return detail::c_over_sinh(p.c) * s;
  }
  if (v < 0) {
    double u = std::sqrt(-v);  // (c/sinh c) sinh(u)/u, u in (0, c)
    return detail::sinh_ratio(u, p.c) * p.c / u;
  }
  double w = std::sqrt(v);
  return detail::c_over_sinh(p.c) * std::sin(w) / w;
}

double eta(const KernelParams& p, double t) {
  double a = std::fabs(t);
  if (a > p.eps) return 0.0;
  double r = a / p.eps;
  double z = p.c * std::sqrt(std::max(0.0, 1.0 - r * r));
  // c/(2 eps) * I0(z)/sinh(c), all factors kept in scaled space
  double v = p.c / (2.0 * p.eps) * bessel_i_scaled(0, z) * std::exp(z - p.c) *
             2.0 / (-std::expm1(-2.0 * p.c));
  return a == p.eps ? 0.5 * v : v;
}

double lambda_norm(const KernelParams& p) {
  double u = std::sqrt(p.c * p.c + 0.25 * p.eps * p.eps);
  return detail::sinh_ratio(u, p.c) * p.c / u;
}

double exp_integral_e1(double y) {
  if (!(y > 0)) throw std::domain_error("exp_integral_e1: requires y > 0");
  if (y <= 1.0) {
    // E1(y) = -gamma - log y + sum_{k>=1} (-1)^{k+1} y^k / (k k!)
    double term = 1.0;  // y^k/k!
    detail::Kahan acc;
    for (int k = 1; k <= 60; ++k) {
      term *= y / k;
      acc.add((k % 2 ? 1.0 : -1.0) * term / k);
      if (term / k < 1e-18) break;
    }
    return -kEulerGamma - std::log(y) + acc.sum;
  }
  // continued fraction, modified Lentz
  double b = y + 1.0;
  double c = 1e308;
  double d = 1.0 / b;
  double h = d;
  for (int i = 1; i <= 200; ++i) {
    double an = -static_cast<double>(i) * i;
    b += 2.0;
    d = 1.0 / (an * d + b);
    c = b + an / c;
    double del = c * d;
    h *= del;
    if (std::fabs(del - 1.0) < 1e-16) break;
  }
  return h * std::exp(-y);
}

double log_integral(double x) {
  if (!(x > 1)) throw std::domain_error("log_integral: requires x > 1");
  auto f = [](double t) { return t <= 0 ? 0.0 : 1.0 / std::log(t); };
  // split at 1 +- d; the symmetric window is a principal value with series
  // value d + d^3/36 + 3 d^5/400 (odd Laurent terms cancel)
  double d = std::min(1e-4, 0.5 * (x - 1));
  double core = d + d * d * d / 36.0 + 3.0 * std::pow(d, 5) / 400.0;
  double left = detail::adaptive_quad(f, 0.0, 1.0 - d, 1e-13);
  double right = x > 1.0 + d
                     ? detail::adaptive_quad(f, 1.0 + d, x,
                                             1e-13 * std::max(1.0, x / std::log(x)))
                     : 0.0;
  return left + core + right;
}

}  // namespace primebound::specfun
