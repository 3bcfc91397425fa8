#include "primebound/primes.hpp"

#include <algorithm>
#include <cmath>
#include <cstring>
#include <istream>
#include <ostream>

#include "internal.hpp"

namespace primebound::primes {

namespace {

constexpr char kMagic[8] = {'P', 'P', 'S', 'I', 'E', 'V', 'E', '1'};
constexpr std::uint64_t kMaxLimit = 1'000'000'000;

std::uint64_t bit_index(std::uint64_t n) { return (n - 3) / 2; }

}  // namespace

PrimePowerSieve PrimePowerSieve::build(std::uint64_t limit,
                                       std::uint64_t memory_budget_bytes) {
  if (limit < 2) throw std::domain_error("sieve: limit must be >= 2");
  if (limit > kMaxLimit) throw std::domain_error("sieve: limit above 1e9");
  std::uint64_t nbits = limit >= 3 ? bit_index(limit) + 1 : 0;
  std::uint64_t words = (nbits + 63) / 64;
  if (words * 8 > memory_budget_bytes)
    throw std::runtime_error("sieve: memory budget exceeded");

  PrimePowerSieve s;
  s.limit_ = limit;
  s.odd_composite_.assign(words, 0);

  // base primes up to sqrt(limit)
  auto root = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(limit)));
  while ((root + 1) * (root + 1) <= limit) ++root;
  std::vector<char> base(root + 1, 1);
  std::vector<std::uint64_t> base_primes;
  for (std::uint64_t i = 2; i <= root; ++i) {
    if (!base[i]) continue;
    base_primes.push_back(i);
    for (std::uint64_t j = i * i; j <= root; j += i) base[j] = 0;
  }

  // segmented marking of odd composites
  std::vector<std::uint64_t> next(base_primes.size());
  for (std::size_t k = 0; k < base_primes.size(); ++k)
    next[k] = base_primes[k] * base_primes[k];
  constexpr std::uint64_t kSegment = 1u << 21;  // odd numbers per segment
  for (std::uint64_t seg_lo = 3; seg_lo <= limit; seg_lo += 2 * kSegment) {
    std::uint64_t seg_hi = std::min(limit, seg_lo + 2 * kSegment - 2);
    for (std::size_t k = 0; k < base_primes.size(); ++k) {
      std::uint64_t p = base_primes[k];
      if (p == 2) continue;
      std::uint64_t q = next[k];
      if (q > seg_hi) continue;
      if (q % 2 == 0) q += p;
      for (; q <= seg_hi; q += 2 * p)
        s.odd_composite_[bit_index(q) >> 6] |= 1ull << (bit_index(q) & 63);
      next[k] = q;
    }
  }

  // higher prime powers by direct exponentiation
  for (std::uint64_t p : base_primes) {
    if (p > root) break;
    std::uint64_t n = p * p;
    std::uint32_t m = 2;
    double logp = std::log(static_cast<double>(p));
    while (n <= limit) {
      s.higher_.push_back({n, p, m, logp});
      if (n > limit / p) break;
      n *= p;
      ++m;
    }
  }
  std::sort(s.higher_.begin(), s.higher_.end(),
            [](const PrimePowerRecord& a, const PrimePowerRecord& b) {
              return a.n < b.n;
            });
  return s;
}

bool PrimePowerSieve::is_prime(std::uint64_t n) const {
  if (n > limit_) throw std::out_of_range("sieve: query above limit");
  if (n == 2) return true;
  if (n < 2 || n % 2 == 0) return false;
  return !(odd_composite_[bit_index(n) >> 6] >> (bit_index(n) & 63) & 1);
}

bool PrimePowerSieve::prime_power(std::uint64_t n, std::uint64_t& p,
                                  std::uint32_t& m) const {
  if (is_prime(n)) {
    p = n;
    m = 1;
    return true;
  }
  auto it = std::lower_bound(higher_.begin(), higher_.end(), n,
                             [](const PrimePowerRecord& r, std::uint64_t v) {
                               return r.n < v;
                             });
  if (it == higher_.end() || it->n != n) return false;
  p = it->p;
  m = it->m;
  return true;
}

void PrimePowerSieve::visit(
    std::uint64_t lo, std::uint64_t hi,
    const std::function<void(const PrimePowerRecord&)>& fn) const {
  if (hi > limit_) throw std::out_of_range("sieve: visit above limit");
  if (lo < 2) lo = 2;
  auto hp = std::lower_bound(higher_.begin(), higher_.end(), lo,
                             [](const PrimePowerRecord& r, std::uint64_t v) {
                               return r.n < v;
                             });
  auto emit_up_to = [&](std::uint64_t n) {
    while (hp != higher_.end() && hp->n < n && hp->n <= hi) {
      fn(*hp);
      ++hp;
    }
  };
  if (lo <= 2 && 2 <= hi) fn({2, 2, 1, std::log(2.0)});
  std::uint64_t n = std::max<std::uint64_t>(3, lo | 1);
  for (; n <= hi; n += 2) {
    std::uint64_t b = bit_index(n);
    if (odd_composite_[b >> 6] >> (b & 63) & 1) continue;
    emit_up_to(n);
    fn({n, n, 1, std::log(static_cast<double>(n))});
  }
  emit_up_to(hi + 1);
}

std::vector<PrimePowerRecord> PrimePowerSieve::records_upto(
    std::uint64_t bound) const {
  std::vector<PrimePowerRecord> out;
  visit(2, std::min(bound, limit_),
        [&](const PrimePowerRecord& r) { out.push_back(r); });
  return out;
}

namespace {

template <class Weight>
StepFunctionValue step_value(double x, const PrimePowerSieve& sieve,
                             const Weight& weight) {
  if (!(x >= 0)) throw std::domain_error("step function: requires x >= 0");
  if (x > static_cast<double>(sieve.limit()))
    throw std::out_of_range("step function: x above sieve limit");
  if (x < 2) return {0.0, false};
  auto ux = static_cast<std::uint64_t>(x);
  detail::Kahan acc;
  bool at_jump = false;
  sieve.visit(2, ux, [&](const PrimePowerRecord& r) {
    double w = weight(r);
    if (static_cast<double>(r.n) == x) {
      acc.add(0.5 * w);
      if (w != 0) at_jump = true;
    } else {
      acc.add(w);
    }
  });
  return {acc.sum, at_jump};
}

}  // namespace

StepFunctionValue psi(double x, const PrimePowerSieve& sieve) {
  return step_value(x, sieve, [](const PrimePowerRecord& r) { return r.logp; });
}

StepFunctionValue theta(double x, const PrimePowerSieve& sieve) {
  return step_value(x, sieve, [](const PrimePowerRecord& r) {
    return r.m == 1 ? r.logp : 0.0;
  });
}

StepFunctionValue pi(double x, const PrimePowerSieve& sieve) {
  return step_value(x, sieve, [](const PrimePowerRecord& r) {
    return r.m == 1 ? 1.0 : 0.0;
  });
}

StepFunctionValue pi_star(double x, const PrimePowerSieve& sieve) {
  return step_value(x, sieve,
                    [](const PrimePowerRecord& r) { return 1.0 / r.m; });
}

namespace {

// int_lo^hi eta(tau) exp(-tau/2) dtau, the reduced edge integral shared by
// psi_smoothed and the boundary correction.
double edge_integral(const specfun::KernelParams& p, double lo, double hi) {
  if (!(lo < hi)) return 0.0;
  auto f = [&](double tau) { return specfun::eta(p, tau) * std::exp(-0.5 * tau); };
  return detail::adaptive_quad(f, lo, hi, 1e-13);
}

}  // namespace

double psi_smoothed(double x, const specfun::KernelParams& p,
                    const PrimePowerSieve& sieve) {
  if (!(p.eps < 0.1))
    throw std::domain_error("psi_smoothed: requires eps < 1/10");
  double cut_hi = x * std::exp(p.eps);
  if (!(cut_hi <= static_cast<double>(sieve.limit())))
    throw std::out_of_range("psi_smoothed: exp(eps) x above sieve limit");
  double cut_lo = x * std::exp(-p.eps);
  double log_x = std::log(x);
  double lambda = specfun::lambda_norm(p);

  detail::Kahan acc;
  // interior: phi(m log p) = exp(m log p / 2) exactly, weight collapses
  auto interior_top = static_cast<std::uint64_t>(cut_lo);
  if (interior_top >= 2)
    sieve.visit(2, interior_top,
                [&](const PrimePowerRecord& r) { acc.add(r.logp); });
  // edge window (cut_lo, cut_hi): quadrature against the kernel
  auto win_lo = interior_top + 1;
  auto win_hi = static_cast<std::uint64_t>(cut_hi);
  if (win_hi >= win_lo)
    sieve.visit(win_lo, win_hi, [&](const PrimePowerRecord& r) {
      auto nd = static_cast<double>(r.n);
      if (!(nd > cut_lo) || !(nd < cut_hi)) return;
      double t = std::log(nd);
      double lo = std::max(-p.eps, t - log_x);
      double hi = std::min(p.eps, t);
      acc.add(r.logp * edge_integral(p, lo, hi) / lambda);
    });
  return acc.sum;
}

double boundary_correction_M(double x, const specfun::KernelParams& p,
                             double t) {
  if (!(p.eps < 0.1))
    throw std::domain_error("boundary_correction_M: requires eps < 1/10");
  double lo_edge = x * std::exp(-p.eps);
  double hi_edge = x * std::exp(p.eps);
  if (t <= lo_edge || t >= hi_edge) {
    // the t == edge cases carry half-weights but the integrals vanish there
    return 0.0;
  }
  double u = std::log(t / x);
  double r = 0.0;
  if (t > x) {
    r += edge_integral(p, u, p.eps);
  } else if (t < x) {
    r -= edge_integral(p, -p.eps, u);
  } else {
    r += 0.5 * edge_integral(p, 0.0, p.eps);
    r -= 0.5 * edge_integral(p, -p.eps, 0.0);
  }
  return std::log(t) / specfun::lambda_norm(p) * r;
}

double partial_summation_residual(SummationKind kind, double a, double x,
                                  const PrimePowerSieve& sieve) {
  if (!(a > 2) || !(a < x) || !(x <= static_cast<double>(sieve.limit())))
    throw std::domain_error(
        "partial_summation_residual: requires 2 < a < x <= limit");
  for (double v : {a, x}) {
    std::uint64_t p;
    std::uint32_t m;
    if (v == std::floor(v) &&
        sieve.prime_power(static_cast<std::uint64_t>(v), p, m))
      throw std::domain_error(
          "partial_summation_residual: endpoints must not be prime powers");
  }
  bool use_psi = kind == SummationKind::psi_to_pistar;
  auto f = [&](double v) { return use_psi ? psi(v, sieve) : theta(v, sieve); };
  auto g = [&](double v) { return use_psi ? pi_star(v, sieve) : pi(v, sieve); };

  double fa = f(a).value, fx = f(x).value;
  double lhs = g(x).value - g(a).value;

  auto li2 = [](double v) {  // antiderivative of 1/log^2
    return specfun::log_integral(v) - v / std::log(v);
  };
  // int_a^x f(t)/(t log^2 t) dt with piecewise-constant f split at jumps
  detail::Kahan fpart;
  double run_f = fa;
  double prev_t = a;
  sieve.visit(static_cast<std::uint64_t>(a) + 1, static_cast<std::uint64_t>(x),
              [&](const PrimePowerRecord& r) {
                double w = use_psi ? r.logp : (r.m == 1 ? r.logp : 0.0);
                if (w == 0) return;
                auto nd = static_cast<double>(r.n);
                fpart.add(run_f * (1.0 / std::log(prev_t) - 1.0 / std::log(nd)));
                run_f += w;
                prev_t = nd;
              });
  fpart.add(run_f * (1.0 / std::log(prev_t) - 1.0 / std::log(x)));
  double integral = li2(x) - li2(a) - fpart.sum;

  double rhs = specfun::log_integral(x) - specfun::log_integral(a) -
               (x - fx) / std::log(x) + (a - fa) / std::log(a) - integral;
  return std::fabs(lhs - rhs);
}

void save_sieve(const PrimePowerSieve& sieve, std::ostream& out) {
  auto w64 = [&](std::uint64_t v) {
    unsigned char b[8];
    for (int i = 0; i < 8; ++i) b[i] = static_cast<unsigned char>(v >> (8 * i));
    out.write(reinterpret_cast<const char*>(b), 8);
  };
  out.write(kMagic, 8);
  w64(sieve.limit());
  std::uint64_t count = 0;
  sieve.visit(2, sieve.limit(), [&](const PrimePowerRecord&) { ++count; });
  w64(count);
  sieve.visit(2, sieve.limit(), [&](const PrimePowerRecord& r) {
    w64(r.n);
    w64(r.p);
    char tail[8] = {static_cast<char>(r.m), 0, 0, 0, 0, 0, 0, 0};
    out.write(tail, 8);
  });
}

PrimePowerSieve load_sieve(std::istream& in) {
  auto r64 = [&]() {
    unsigned char b[8];
    in.read(reinterpret_cast<char*>(b), 8);
    if (!in) throw std::runtime_error("sieve cache: truncated");
    std::uint64_t v = 0;
    for (int i = 7; i >= 0; --i) v = (v << 8) | b[i];
    return v;
  };
  char magic[8];
  in.read(magic, 8);
  if (!in || std::memcmp(magic, kMagic, 8) != 0)
    throw std::runtime_error("sieve cache: bad magic (expected PPSIEVE1)");
  std::uint64_t limit = r64();
  std::uint64_t count = r64();
  if (limit < 2 || limit > kMaxLimit)
    throw std::runtime_error("sieve cache: implausible limit");

  PrimePowerSieve s;
  s.limit_ = limit;
  std::uint64_t nbits = limit >= 3 ? bit_index(limit) + 1 : 0;
  s.odd_composite_.assign((nbits + 63) / 64, ~0ull);  // everything composite
  std::uint64_t prev = 0;
  for (std::uint64_t i = 0; i < count; ++i) {
    std::uint64_t n = r64();
    std::uint64_t p = r64();
    char tail[8];
    in.read(tail, 8);
    if (!in) throw std::runtime_error("sieve cache: truncated record");
    auto m = static_cast<std::uint32_t>(static_cast<unsigned char>(tail[0]));
    if (n <= prev || n > limit || m < 1)
      throw std::runtime_error("sieve cache: record order/range violation");
    double chk = std::pow(static_cast<double>(p), static_cast<double>(m));
    if (std::fabs(chk - static_cast<double>(n)) > 0.5)
      throw std::runtime_error("sieve cache: record is not p^m");
    prev = n;
    if (m == 1) {
      if (n >= 3) {
        std::uint64_t b = bit_index(n);
        s.odd_composite_[b >> 6] &= ~(1ull << (b & 63));
      }
    } else {
      s.higher_.push_back({n, p, m, std::log(static_cast<double>(p))});
    }
  }
  return s;
}

}  // namespace primebound::primes
