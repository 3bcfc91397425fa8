// Prime-power sieve and the step functions psi, theta, pi, pi* with the
// half-weight jump convention; the smoothed Chebyshev function and its
// boundary correction; partial-summation residual checks.
#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <vector>

#include "primebound/specfun.hpp"

namespace primebound::primes {

struct PrimePowerRecord {
  std::uint64_t n;  // p^m
  std::uint64_t p;
  std::uint32_t m;
  double logp;
};

// Bit sieve of primes up to `limit` plus the (few) higher prime powers,
// immutable once built.
class PrimePowerSieve {
 public:
  static PrimePowerSieve build(std::uint64_t limit,
                               std::uint64_t memory_budget_bytes = 1ull << 30);

  std::uint64_t limit() const { return limit_; }
  bool is_prime(std::uint64_t n) const;
  // fills p, m when n = p^m; false otherwise
  bool prime_power(std::uint64_t n, std::uint64_t& p, std::uint32_t& m) const;

  // ascending visit of every record with lo <= n <= hi
  void visit(std::uint64_t lo, std::uint64_t hi,
             const std::function<void(const PrimePowerRecord&)>& fn) const;

  // materialized records with n <= bound (intended for small bounds)
  std::vector<PrimePowerRecord> records_upto(std::uint64_t bound) const;

  const std::vector<PrimePowerRecord>& higher_powers() const { return higher_; }

 private:
  std::uint64_t limit_ = 0;
  std::vector<std::uint64_t> odd_composite_;  // bit i <-> 2i+3
  std::vector<PrimePowerRecord> higher_;      // m >= 2, ascending in n

  friend PrimePowerSieve load_sieve(std::istream&);
};

// Value of a prime-counting step function; at_jump is set when x hits a
// jump point exactly, in which case the half-weight convention applied.
struct StepFunctionValue {
  double value;
  bool at_jump;
};

StepFunctionValue psi(double x, const PrimePowerSieve& sieve);
StepFunctionValue theta(double x, const PrimePowerSieve& sieve);
StepFunctionValue pi(double x, const PrimePowerSieve& sieve);
StepFunctionValue pi_star(double x, const PrimePowerSieve& sieve);

// The smoothed Chebyshev function psi_{c,eps}(x). Requires eps < 1/10 and
// exp(eps) x <= sieve.limit.
double psi_smoothed(double x, const specfun::KernelParams& p,
                    const PrimePowerSieve& sieve);

// Boundary correction M_{x,c,eps}(t): subtracting (1/m) M(p^m) over the
// window exp(-eps) x < p^m < exp(eps) x turns psi_smoothed into psi.
// Zero outside the window; half-weights at the window edges and at t = x.
double boundary_correction_M(double x, const specfun::KernelParams& p, double t);

enum class SummationKind { psi_to_pistar, theta_to_pi };

// |LHS - RHS| of the partial-summation identity linking (psi, pi*) or
// (theta, pi) through li. Requires 2 < a < x <= limit, neither a prime power.
double partial_summation_residual(SummationKind kind, double a, double x,
                                  const PrimePowerSieve& sieve);

// Cache format: "PPSIEVE1", limit u64-LE, count u64-LE, then count records
// of (n u64-LE, p u64-LE, m u8, 7 pad bytes).
void save_sieve(const PrimePowerSieve& sieve, std::ostream& out);
PrimePowerSieve load_sieve(std::istream& in);

}  // namespace primebound::primes
