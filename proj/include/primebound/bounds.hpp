// The certified bound engine: zero-sum remainders, the prime-sum bound A,
// Chebyshev delta_0 certificates, parameter optimization, the truncated
// explicit formula, Schoenfeld thresholds and verification scans, and the
// large-x error ledger.
#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "primebound/kernel.hpp"
#include "primebound/primes.hpp"
#include "primebound/specfun.hpp"
#include "primebound/zeros.hpp"

namespace primebound::bounds {

// Parameters are infeasible (typically B <= 1); carries the offending value.
class InfeasibleError : public std::runtime_error {
 public:
  InfeasibleError(const std::string& what, double b)
      : std::runtime_error(what), b_value(b) {}
  double b_value;
};

// Input tuple of the Chebyshev bound: |psi(x) - x| <= delta0 x for
// x >= exp(alpha eps) x0, assuming RH up to c/eps <= T.
struct ChebyshevBoundParams {
  double x0;
  double c;
  double eps;
  double alpha;
  double T;

  ChebyshevBoundParams(double x0_, double c_, double eps_, double alpha_,
                       double T_);
  specfun::KernelParams kernel() const { return {c, eps}; }
};

struct BoundCertificate {
  double E1 = 0;
  double E2 = 0;
  double E3 = 0;
  double delta0 = 0;
  double valid_from = 0;            // exp(alpha eps) x0
  double rh_height_required = 0;    // c/eps
  double zero_data_height_used = 0; // exact zero-sum prefix ends here
  double tail_bound_used = 0;       // analytic bound on the rest of E3's sum
  double slack = 0;                 // one-sided rounding slack on delta0
  bool pure_tail_warning = false;   // no usable exact prefix in the table

  // the hypothesis a consumer must discharge for the bound to hold
  std::string assumption() const;
};

// Unconditional bound on the zero sum beyond the cutoff c/eps.
// Requires x > 1, eps <= 1e-3, c >= 3.
double tail_remainder_rem1(const specfun::KernelParams& p, double x);

// Bound on the band a c/eps < |gamma| <= c/eps, conditional on RH to c/eps.
// Requires a in (0,1) with a c/eps >= 1e3.
double band_remainder_rem2(const specfun::KernelParams& p, double a, double x);

// A(x,c,eps,alpha): |psi(e^{-+alpha eps} x) - psi_smoothed(x)| <= A.
// Requires eps < 1e-2, x > 100 and B > 1 (else InfeasibleError).
double prime_sum_bound_A(double x, const specfun::KernelParams& p, double alpha,
                         kernel::BracketProvider& brackets);

BoundCertificate chebyshev_delta0(const ChebyshevBoundParams& p,
                                  const zeros::ZeroTable& table,
                                  kernel::BracketProvider& brackets);

// Grid search over c = 3..60, alpha = 0..0.30 step 0.01 with eps = c/T;
// deterministic tie-break toward smaller c, then smaller alpha.
std::pair<ChebyshevBoundParams, BoundCertificate> optimize_params(
    double x0, double T, const zeros::ZeroTable& table,
    kernel::BracketProvider& brackets);

struct ExplicitFormulaResult {
  double value;
  double error_budget;
};

// Truncated explicit formula for psi_smoothed(x); the budget covers the
// smoothing slack and both truncated tails (x^rho and constant parts).
ExplicitFormulaResult explicit_formula_rhs(double x,
                                           const specfun::KernelParams& p,
                                           const zeros::ZeroTable& table);

// Largest x with 4.92 sqrt(x/log x) <= T, to 1e-6 relative. T >= 100.
double schoenfeld_threshold(double T);

enum class PrimeFunction { psi, theta, pi, pi_star };

struct Violation {
  double x;
  std::string function;
  double lhs;
  double rhs;
};

struct SchoenfeldReport {
  double lo = 0;
  double hi = 0;
  std::vector<PrimeFunction> inequalities_checked;
  std::vector<Violation> violations;
  std::uint64_t scan_points = 0;

  bool passed() const { return violations.empty(); }
};

// Scan [lo,hi] at every jump point (both one-sided limits) plus endpoints.
// Also checks 0 <= x - theta(x) <= 1.938 sqrt(x) wherever the range meets
// [5000, hi]; those rows are reported as "theta_gap".
SchoenfeldReport schoenfeld_verify(double lo, double hi,
                                   const std::vector<PrimeFunction>& which,
                                   const primes::PrimePowerSieve& sieve);

struct AsymptoticTerms {
  double e1, e2, e3, e4, e5;
  double normalized_total;  // sum / (sqrt(x) log x)
  double c, eps;            // the parameter choices behind the ledger
};

// Five-term error ledger of the large-x regime, x >= 1e19.
AsymptoticTerms asymptotic_error_terms(double x);

// Mid-range certification grid: checks
// delta y <= e^{-1/8} (sqrt(y)/8pi) log(y) (log(y) - 3) per supplied pair.
struct MidrangeRow {
  double y;
  double delta;
  double rhs;
  bool certified;
};
std::vector<MidrangeRow> midrange_report(
    const std::vector<std::pair<double, double>>& pairs);

std::string certificate_json(const ChebyshevBoundParams& p,
                             const BoundCertificate& cert);

}  // namespace primebound::bounds
