// Special-function kernel: scaled modified Bessel functions, the Logan
// band-limited filter and its Fourier transform, the normalization constant
// lambda, and the logarithmic / exponential integrals.
#pragma once

#include <stdexcept>

namespace primebound::specfun {

inline constexpr double kEulerGamma = 0.57721566490153286061;

// C1 = -gamma/2 - 1 - log(pi)/2, the constant term of the truncated
// explicit formula.
inline constexpr double kC1 = -1.8609727753754665174;

// Parameters of the smoothing kernel: c is the Logan sharpness, eps the
// half-width of the smoothing window on the log scale.
struct KernelParams {
  double c;
  double eps;

  KernelParams(double c_, double eps_) : c(c_), eps(eps_) {
    if (!(c > 0) || !(eps > 0))
      throw std::domain_error("KernelParams: c and eps must be positive");
  }

  // Frequency cutoff of the filter; the zero sum is truncated here.
  double cutoff() const { return c / eps; }
};

// I_order(x) * exp(-x). Relative error <= 1e-12 for order in [0,64],
// x in [0,100]; still accurate to ~1e-13 up to x = 200.
double bessel_i_scaled(double order, double x);

// The Logan filter ell_{c,eps}(xi) on the real axis. Equals 1 at xi = 0,
// decreases monotonically to c/sinh(c) at xi = c/eps, oscillates beyond.
double logan_ell(const KernelParams& p, double xi);

// Fourier transform of logan_ell: a compactly supported Bessel bump on
// [-eps, eps] with unit mass. Takes half the one-sided limit at |t| = eps.
double eta(const KernelParams& p, double t);

// ell evaluated at the analytic continuation point i/2; always >= 1.
// Normalizes the smoothed kernel so that it reproduces exp(t/2) exactly.
double lambda_norm(const KernelParams& p);

// First exponential integral E_1(y) = int_y^inf exp(-t)/t dt, y > 0.
double exp_integral_e1(double y);

// Logarithmic integral li(x), Cauchy principal value of int_0^x dt/log(t),
// for x > 1.
double log_integral(double x);

}  // namespace primebound::specfun
