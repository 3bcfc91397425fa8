// Certified enclosures of the kernel antiderivatives mu_c(alpha) and
// |nu_c(alpha)| via monotone Riemann sums, the closed form for nu_c(0),
// and the decay constant D(c0).
#pragma once

#include <cstdint>
#include <map>
#include <utility>

#include "primebound/specfun.hpp"

namespace primebound::kernel {

// Two-sided enclosure produced by lower/upper Riemann sums with K steps.
// Refining K can only tighten it.
struct KernelBracket {
  double lo;
  double hi;
  std::uint32_t steps;

  double mid() const { return 0.5 * (lo + hi); }
  double width() const { return hi - lo; }
};

// Enclosure of mu_c(alpha) = int_alpha^1 eta_{c,1}; values lie in [0, 1/2].
// Requires c >= 3, alpha in [0,1), K >= 1.
KernelBracket mu_bracket(double c, double alpha, std::uint32_t k);

// Enclosure of |nu_c(alpha)| = int_alpha^1 mu_c; nonnegative.
KernelBracket nu_bracket(double c, double alpha, std::uint32_t k);

// |nu_c(0)| = I_1(c) / (2 sinh c), c > 0.
double nu0_exact(double c);

// D(c0) = sqrt(pi c0 / 2) I_1(c0) / sinh(c0); increasing, < 1, -> 1.
double decay_constant_D(double c0);

// Doubling refinement starting at K = 256 until the relative width drops
// below tol or K reaches 2^20.
KernelBracket mu_adaptive(double c, double alpha, double tol = 1e-4);
KernelBracket nu_adaptive(double c, double alpha, double tol = 1e-4);

// Memoizing bracket source for the bound engine. Not thread-safe.
class BracketProvider {
 public:
  explicit BracketProvider(double tol = 1e-4) : tol_(tol) {}

  const KernelBracket& mu(double c, double alpha);
  const KernelBracket& nu(double c, double alpha);
  double tol() const { return tol_; }

 private:
  double tol_;
  std::map<std::pair<double, double>, KernelBracket> mu_cache_;
  std::map<std::pair<double, double>, KernelBracket> nu_cache_;
};

}  // namespace primebound::kernel
