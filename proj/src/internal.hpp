// Private numeric helpers shared by the library sources.
#pragma once

#include <cmath>
#include <cstddef>
#include <utility>

namespace primebound::detail {

// One-sided slack applied to certified upper bounds; covers binary64
// rounding in the summations feeding them.
inline constexpr double kCertifySlack = 1e-9;

inline double certify_up(double v) { return v * (1.0 + kCertifySlack); }
inline double certify_down(double v) { return v * (1.0 - kCertifySlack); }

// Kahan compensated accumulator.
struct Kahan {
  double sum = 0;
  double carry = 0;

  void add(double x) {
    double y = x - carry;
    double t = sum + y;
    carry = (t - sum) - y;
    sum = t;
  }
};

// sinh(a)/sinh(b) without large intermediates, a,b > 0.
inline double sinh_ratio(double a, double b) {
  return std::exp(a - b) * std::expm1(-2.0 * a) / std::expm1(-2.0 * b);
}

// c/sinh(c), c > 0.
inline double c_over_sinh(double c) {
  return -2.0 * c * std::exp(-c) / std::expm1(-2.0 * c);
}

// cosh(a)/sinh(b), a >= 0, b > 0.
inline double cosh_over_sinh(double a, double b) {
  return std::exp(a - b) * (1.0 + std::exp(-2.0 * a)) / (-std::expm1(-2.0 * b));
}

// Adaptive 15-point Gauss-Legendre quadrature with interval bisection.
// Absolute tolerance; the error estimate is the difference between the
// whole-panel value and the sum over the two halves.
namespace gl15 {
inline constexpr double kNodes[15] = {
    -0.987992518020485428, -0.937273392400705904, -0.848206583410427216,
    -0.724417731360170047, -0.570972172608538848, -0.394151347077563370,
    -0.201194093997434522, 0.0,                   0.201194093997434522,
    0.394151347077563370,  0.570972172608538848,  0.724417731360170047,
    0.848206583410427216,  0.937273392400705904,  0.987992518020485428};
inline constexpr double kWeights[15] = {
    0.0307532419961172684, 0.0703660474881081247, 0.107159220467171935,
    0.139570677926154314,  0.166269205816993934,  0.186161000015562211,
    0.198431485327111576,  0.202578241925561273,  0.198431485327111576,
    0.186161000015562211,  0.166269205816993934,  0.139570677926154314,
    0.107159220467171935,  0.0703660474881081247, 0.0307532419961172684};
}  // namespace gl15

template <class F>
double gl15_panel(const F& f, double a, double b) {
  double mid = 0.5 * (a + b), half = 0.5 * (b - a);
  Kahan acc;
  for (int i = 0; i < 15; ++i)
    acc.add(gl15::kWeights[i] * f(mid + half * gl15::kNodes[i]));
  return acc.sum * half;
}

template <class F>
double adaptive_quad_rec(const F& f, double a, double b, double whole,
                         double tol, int depth) {
  double m = 0.5 * (a + b);
  double left = gl15_panel(f, a, m);
  double right = gl15_panel(f, m, b);
  double err = std::fabs(left + right - whole);
  if (err < tol || depth >= 40) return left + right;
  return adaptive_quad_rec(f, a, m, left, 0.5 * tol, depth + 1) +
         adaptive_quad_rec(f, m, b, right, 0.5 * tol, depth + 1);
}

// integral of f over [a,b] to absolute tolerance tol.
template <class F>
double adaptive_quad(const F& f, double a, double b, double tol) {
  if (!(a < b)) return 0.0;
  return adaptive_quad_rec(f, a, b, gl15_panel(f, a, b), tol, 0);
}

}  // namespace primebound::detail
