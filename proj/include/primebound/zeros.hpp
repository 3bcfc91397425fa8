// Ingestion and querying of zeta-zero ordinate tables, zero-counting
// estimates with Rosser's bound, and certified sums of 1/gamma and of
// ell(gamma)/gamma including tail bounds beyond the data height.
#pragma once

#include <cstddef>
#include <iosfwd>
#include <string>
#include <vector>

#include "primebound/specfun.hpp"

namespace primebound::zeros {

// Ascending ordinates gamma of critical-line zeros. Every zero with
// 0 < gamma <= height is present (with multiplicity as stored); each
// ordinate carries absolute error at most `precision`.
struct ZeroTable {
  std::vector<double> ordinates;
  double height = 0;
  double precision = 1e-8;
  std::string source;

  bool empty() const { return ordinates.empty(); }

  // N(t): number of stored ordinates <= t.
  std::size_t count_below(double t) const;
};

enum class Format { text, binary };

// Text: one decimal ordinate per line, ascending; '#' starts a comment;
// header comments may declare height=, precision=, source=.
// Binary: magic "ZETZERO1", u64-LE count, count binary64-LE ordinates.
ZeroTable load_zeros(std::istream& in, Format format);
ZeroTable load_zeros_file(const std::string& path);  // format sniffed by magic
void save_zeros(const ZeroTable& table, std::ostream& out, Format format);

// Enclosure g(t) +- log t of the zero-counting function N(t), t >= 14.
struct CountingEstimate {
  double t;
  double main;
  double lo;
  double hi;
};

// g(t) = (t/2pi) log(t/2pi e) + 7/8, t >= 14.
double counting_main_term(double t);
CountingEstimate counting_bounds(double t);

// Upper bound on sum of 1/gamma over t1 <= gamma < t2, 14 <= t1 < t2.
double reciprocal_sum_bound(double t1, double t2);

// Upper bound on the whole-range sum over 0 < gamma < t2, t2 >= 5000.
double reciprocal_sum_bound_from_zero(double t2);

// Upper bound on sum of ell_{c,eps}(gamma)/gamma over T0 <= gamma < T1,
// 14 <= T0 < T1 <= c/eps.
double weighted_tail_bound(const specfun::KernelParams& p, double t0, double t1);

// Exact sum of ell_{c,eps}(gamma)/gamma over stored gamma <= up_to,
// ascending compensated summation. Requires up_to <= table.height.
double exact_weighted_sum(const ZeroTable& table, const specfun::KernelParams& p,
                          double up_to);

}  // namespace primebound::zeros
