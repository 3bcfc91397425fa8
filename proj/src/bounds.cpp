#include "primebound/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <optional>
#include <sstream>

#include <json.hpp>

#include "internal.hpp"

namespace primebound::bounds {

namespace {

constexpr double kPi = std::numbers::pi;

double log_2x_squared(double x) {  // log(2 x^2) without squaring x
  return std::numbers::ln2 + 2.0 * std::log(x);
}

// rem1 with the x-dependent factor passed in; shared with the constant-part
// tail of the explicit formula where the factor is (1+1) = 2.
double rem1_core(const specfun::KernelParams& p, double x_plus_1) {
  // cosh_over_sinh(0, c) is exactly 1/sinh(c)
  return detail::certify_up(0.16 * x_plus_1 * detail::cosh_over_sinh(0.0, p.c) *
                            std::exp(0.71 * std::sqrt(p.c * p.eps)) *
                            std::log(3.0 * p.c) * std::log(p.cutoff()));
}

}  // namespace

ChebyshevBoundParams::ChebyshevBoundParams(double x0_, double c_, double eps_,
                                           double alpha_, double T_)
    : x0(x0_), c(c_), eps(eps_), alpha(alpha_), T(T_) {
  if (!(x0 >= 100)) throw std::domain_error("ChebyshevBoundParams: x0 >= 100");
  if (!(c >= 3)) throw std::domain_error("ChebyshevBoundParams: c >= 3");
  if (!(eps > 0 && eps < 1e-3))
    throw std::domain_error("ChebyshevBoundParams: eps in (0, 1e-3)");
  if (!(alpha >= 0 && alpha < 1))
    throw std::domain_error("ChebyshevBoundParams: alpha in [0,1)");
  // rounding slack: eps = c/T reconstructs c/eps = T only up to one ulp
  if (!(c / eps <= T * (1 + 1e-12)))
    throw std::domain_error("ChebyshevBoundParams: requires c/eps <= T");
}

std::string BoundCertificate::assumption() const {
  std::ostringstream os;
  os << "RH verified for 0 < gamma <= " << rh_height_required;
  return os.str();
}

double tail_remainder_rem1(const specfun::KernelParams& p, double x) {
  if (!(x > 1)) throw std::domain_error("tail_remainder_rem1: requires x > 1");
  if (!(p.eps <= 1e-3))
    throw std::domain_error("tail_remainder_rem1: requires eps <= 1e-3");
  if (!(p.c >= 3)) throw std::domain_error("tail_remainder_rem1: requires c >= 3");
  return rem1_core(p, x + 1.0);
}

double band_remainder_rem2(const specfun::KernelParams& p, double a, double x) {
  if (!(a > 0 && a < 1))
    throw std::domain_error("band_remainder_rem2: requires a in (0,1)");
  if (!(a * p.cutoff() >= 1e3))
    throw std::domain_error("band_remainder_rem2: requires a c/eps >= 1e3");
  double ratio = detail::cosh_over_sinh(p.c * std::sqrt(1.0 - a * a), p.c);
  return detail::certify_up((1.0 + 11.0 * p.c * p.eps) / (kPi * p.c * a * a) *
                            std::log(p.cutoff()) * ratio * std::sqrt(x));
}

namespace {

// B = eps x e^{-eps} |nu_c(alpha)| / (2 mu_c(alpha)) from certified brackets,
// rounded down (nu low, mu high) so that log B only shrinks.
double conservative_B(double x, const specfun::KernelParams& p, double alpha,
                      kernel::BracketProvider& brackets) {
  double nu_lo = brackets.nu(p.c, alpha).lo;
  double mu_hi = brackets.mu(p.c, alpha).hi;
  return p.eps * x * std::exp(-p.eps) * nu_lo / (2.0 * mu_hi);
}

// The nu/log(B) block of E1, evaluated with the closed-form
// |nu_c(0)| = I_1(c)/(2 sinh c) >= |nu_c(alpha)|. Since t -> t/log(K t)
// increases while K t > e, the substitution stays an upper bound of the
// per-alpha value whenever the bracket-certified B exceeds e; below that
// it falls back to the bracket form (nu high up, nu low inside the log).
double e1_nu_block(double x, const specfun::KernelParams& p, double alpha,
                   kernel::BracketProvider& brackets, double b_certified) {
  double mu_hi = brackets.mu(p.c, alpha).hi;
  if (b_certified > std::numbers::e) {
    double nu0 = detail::certify_up(kernel::nu0_exact(p.c));
    double b0 = p.eps * x * std::exp(-p.eps) * nu0 / (2.0 * mu_hi);
    return 2.0 * p.eps * nu0 / std::log(b0);
  }
  double nu_hi = brackets.nu(p.c, alpha).hi;
  return 2.0 * p.eps * nu_hi / std::log(b_certified);
}

}  // namespace

double prime_sum_bound_A(double x, const specfun::KernelParams& p, double alpha,
                         kernel::BracketProvider& brackets) {
  if (!(p.eps < 1e-2))
    throw std::domain_error("prime_sum_bound_A: requires eps < 1e-2");
  if (!(x > 100)) throw std::domain_error("prime_sum_bound_A: requires x > 100");
  if (!(alpha >= 0 && alpha < 1))
    throw std::domain_error("prime_sum_bound_A: requires alpha in [0,1)");
  double b = conservative_B(x, p, alpha, brackets);
  if (!(b > 1)) {
    std::ostringstream os;
    os << "prime_sum_bound_A: infeasible parameters, B = " << b << " <= 1";
    throw InfeasibleError(os.str(), b);
  }
  double nu_hi = brackets.nu(p.c, alpha).hi;
  double a = std::exp(2.0 * p.eps) * std::log(std::exp(p.eps) * x) *
             (2.0 * p.eps * x * nu_hi / std::log(b) +
              2.01 * p.eps * std::sqrt(x) + 0.5 * std::log(log_2x_squared(x)));
  return detail::certify_up(a);
}

BoundCertificate chebyshev_delta0(const ChebyshevBoundParams& p,
                                  const zeros::ZeroTable& table,
                                  kernel::BracketProvider& brackets) {
  specfun::KernelParams kp = p.kernel();
  double cutoff = kp.cutoff();

  BoundCertificate cert;
  cert.rh_height_required = cutoff;
  cert.valid_from = std::exp(p.alpha * p.eps) * p.x0;
  cert.slack = detail::kCertifySlack;

  // E3: exact prefix over the data, analytic tail bound for the rest
  double prefix_top = std::min(table.height, cutoff);
  detail::Kahan zsum;
  if (!table.empty() && prefix_top >= table.ordinates.front()) {
    zsum.add(zeros::exact_weighted_sum(table, kp, prefix_top));
    cert.zero_data_height_used = prefix_top;
  } else {
    cert.pure_tail_warning = true;
    cert.zero_data_height_used = 0;
    prefix_top = 14.0;
  }
  if (prefix_top < cutoff) {
    cert.tail_bound_used = zeros::weighted_tail_bound(kp, prefix_top, cutoff);
    zsum.add(cert.tail_bound_used);
  }
  cert.E3 = 2.0 / std::sqrt(p.x0) * zsum.sum + 2.0 / p.x0;

  double b0 = conservative_B(p.x0, kp, p.alpha, brackets);
  if (!(b0 > 1)) {
    std::ostringstream os;
    os << "chebyshev_delta0: infeasible parameters, B0 = " << b0 << " <= 1";
    throw InfeasibleError(os.str(), b0);
  }
  cert.E1 = std::exp(2.0 * p.eps) * std::log(std::exp(p.eps) * p.x0) *
            (e1_nu_block(p.x0, kp, p.alpha, brackets, b0) +
             2.01 * p.eps / std::sqrt(p.x0) +
             std::log(log_2x_squared(p.x0)) / (2.0 * p.x0));
  cert.E2 = 0.16 * (1.0 + 1.0 / p.x0) * detail::cosh_over_sinh(0.0, p.c) *
            std::exp(0.71 * std::sqrt(p.c * p.eps)) * std::log(cutoff);
  cert.delta0 = detail::certify_up(std::exp(p.alpha * p.eps) *
                                   (cert.E1 + cert.E2 + cert.E3));
  return cert;
}

std::pair<ChebyshevBoundParams, BoundCertificate> optimize_params(
    double x0, double T, const zeros::ZeroTable& table,
    kernel::BracketProvider& brackets) {
  if (!(x0 >= 100)) throw std::domain_error("optimize_params: x0 >= 100");
  if (!(T >= 1e3)) throw std::domain_error("optimize_params: T >= 1e3");

  // coarse survey brackets; the winning cell is re-certified below with the
  // caller's provider
  static kernel::BracketProvider survey(1e-3);

  std::optional<ChebyshevBoundParams> best;
  double best_delta = 0;
  for (int ci = 3; ci <= 60; ++ci) {
    double c = ci;
    double eps = c / T;
    if (!(eps < 1e-3)) continue;
    specfun::KernelParams kp(c, eps);
    double cutoff = kp.cutoff();

    double prefix_top = std::min(table.height, cutoff);
    double zsum = 0;
    bool have_prefix = !table.empty() && prefix_top >= table.ordinates.front();
    if (have_prefix) zsum = zeros::exact_weighted_sum(table, kp, prefix_top);
    else prefix_top = 14.0;
    if (prefix_top < cutoff)
      zsum += zeros::weighted_tail_bound(kp, prefix_top, cutoff);
    double e3 = 2.0 / std::sqrt(x0) * zsum + 2.0 / x0;
    double e2 = 0.16 * (1.0 + 1.0 / x0) * detail::cosh_over_sinh(0.0, c) *
                std::exp(0.71 * std::sqrt(c * eps)) * std::log(cutoff);
    if (best && e2 + e3 >= best_delta) continue;  // E1 >= 0 cannot rescue it

    for (int ai = 0; ai <= 30; ++ai) {
      double alpha = ai * 0.01;
      double b0 = conservative_B(x0, kp, alpha, survey);
      if (!(b0 > 1)) continue;
      double e1 = std::exp(2.0 * eps) * std::log(std::exp(eps) * x0) *
                  (e1_nu_block(x0, kp, alpha, survey, b0) +
                   2.01 * eps / std::sqrt(x0) +
                   std::log(log_2x_squared(x0)) / (2.0 * x0));
      double delta = std::exp(alpha * eps) * (e1 + e2 + e3);
      if (!best || delta < best_delta) {
        best.emplace(x0, c, eps, alpha, T);
        best_delta = delta;
      }
    }
  }
  if (!best)
    throw InfeasibleError("optimize_params: no feasible grid point", 0.0);
  return {*best, chebyshev_delta0(*best, table, brackets)};
}

ExplicitFormulaResult explicit_formula_rhs(double x,
                                           const specfun::KernelParams& p,
                                           const zeros::ZeroTable& table) {
  if (!(p.eps > 0 && p.eps < 0.1))
    throw std::domain_error("explicit_formula_rhs: requires 0 < eps < 1/10");
  double log_x = std::log(x);
  if (!(log_x > 2.0 / std::fabs(std::log(p.eps))))
    throw std::domain_error("explicit_formula_rhs: x too small for eps");
  double cutoff = p.cutoff();
  if (!(cutoff <= table.height))
    throw std::domain_error("explicit_formula_rhs: zero table shorter than c/eps");

  double lambda = specfun::lambda_norm(p);
  double sqrt_x = std::sqrt(x);
  detail::Kahan sum;  // conjugate pairs combined into a real term
  for (double g : table.ordinates) {
    if (g > cutoff) break;
    double a = specfun::logan_ell(p, g) / lambda;
    double re = sqrt_x * std::cos(g * log_x) - 1.0;
    double im = sqrt_x * std::sin(g * log_x);
    sum.add(a * 2.0 * (0.5 * re + g * im) / (0.25 + g * g));
  }
  double value = x - sum.sum + specfun::kC1 - 0.5 * std::log1p(-1.0 / (x * x));
  double budget = 8.0 * p.eps * std::fabs(std::log(p.eps)) +
                  rem1_core(p, x + 1.0) + rem1_core(p, 2.0);
  return {value, budget};
}

double schoenfeld_threshold(double T) {
  if (!(T >= 100)) throw std::domain_error("schoenfeld_threshold: T >= 100");
  auto f = [](double x) { return 4.92 * std::sqrt(x / std::log(x)); };
  double lo = 10.0;
  double hi = std::pow(T / 4.92, 2) * std::max(4.0 * std::log(T), 10.0);
  while (f(hi) <= T) hi *= 4;
  while ((hi - lo) / hi > 1e-7) {
    double mid = 0.5 * (lo + hi);
    (f(mid) <= T ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

namespace {

const char* function_name(PrimeFunction f) {
  switch (f) {
    case PrimeFunction::psi: return "psi";
    case PrimeFunction::theta: return "theta";
    case PrimeFunction::pi: return "pi";
    case PrimeFunction::pi_star: return "pi_star";
  }
  return "?";
}

struct ScanState {
  double psi = 0, theta = 0, pi = 0, pi_star = 0;
  detail::Kahan li;
};

}  // namespace

SchoenfeldReport schoenfeld_verify(double lo, double hi,
                                   const std::vector<PrimeFunction>& which,
                                   const primes::PrimePowerSieve& sieve) {
  if (!(lo >= 2) || !(lo < hi) ||
      !(hi <= static_cast<double>(sieve.limit())))
    throw std::out_of_range("schoenfeld_verify: requires 2 <= lo < hi <= limit");

  SchoenfeldReport report;
  report.lo = lo;
  report.hi = hi;
  report.inequalities_checked = which;

  bool sel[4] = {};
  for (PrimeFunction f : which) sel[static_cast<int>(f)] = true;

  ScanState st;
  // left limits at lo: full weights strictly below
  sieve.visit(2, static_cast<std::uint64_t>(std::ceil(lo)) - 1,
              [&](const primes::PrimePowerRecord& r) {
                if (static_cast<double>(r.n) >= lo) return;
                st.psi += r.logp;
                st.pi_star += 1.0 / r.m;
                if (r.m == 1) {
                  st.theta += r.logp;
                  st.pi += 1.0;
                }
              });
  st.li.add(specfun::log_integral(lo));

  detail::Kahan psi_acc, theta_acc, pi_acc, pistar_acc;
  psi_acc.add(st.psi);
  theta_acc.add(st.theta);
  pi_acc.add(st.pi);
  pistar_acc.add(st.pi_star);

  double prev_x = lo;
  auto li_advance = [&](double to) {
    if (to > prev_x) {
      st.li.add(detail::gl15_panel(
          [](double t) { return 1.0 / std::log(t); }, prev_x, to));
      prev_x = to;
    }
  };

  auto check_at = [&](double x) {
    double rx = std::sqrt(x), lx = std::log(x);
    double cheb_rhs = rx / (8.0 * kPi) * lx * lx;
    double li_rhs = rx / (8.0 * kPi) * lx;
    auto flag = [&](PrimeFunction f, double lhs, double rhs) {
      if (lhs > rhs)
        report.violations.push_back({x, function_name(f), lhs, rhs});
    };
    if (sel[0]) flag(PrimeFunction::psi, std::fabs(psi_acc.sum - x), cheb_rhs);
    if (sel[1])
      flag(PrimeFunction::theta, std::fabs(theta_acc.sum - x), cheb_rhs);
    if (sel[2]) flag(PrimeFunction::pi, std::fabs(pi_acc.sum - st.li.sum), li_rhs);
    if (sel[3])
      flag(PrimeFunction::pi_star, std::fabs(pistar_acc.sum - st.li.sum), li_rhs);
    if (x >= 5000) {
      double gap = x - theta_acc.sum;
      if (gap < 0)
        report.violations.push_back({x, "theta_gap", gap, 0.0});
      if (gap > 1.938 * rx)
        report.violations.push_back({x, "theta_gap", gap, 1.938 * rx});
    }
  };

  check_at(lo);
  ++report.scan_points;
  sieve.visit(static_cast<std::uint64_t>(std::ceil(lo)),
              static_cast<std::uint64_t>(hi),
              [&](const primes::PrimePowerRecord& r) {
                auto x = static_cast<double>(r.n);
                if (x < lo || x > hi) return;
                li_advance(x);
                if (x != lo) check_at(x);  // left limit; lo already checked
                psi_acc.add(r.logp);
                pistar_acc.add(1.0 / r.m);
                if (r.m == 1) {
                  theta_acc.add(r.logp);
                  pi_acc.add(1.0);
                }
                check_at(x);  // right limit
                ++report.scan_points;
              });
  li_advance(hi);
  check_at(hi);
  ++report.scan_points;
  return report;
}

AsymptoticTerms asymptotic_error_terms(double x) {
  if (!(x >= 1e19))
    throw std::domain_error("asymptotic_error_terms: requires x >= 1e19");
  double rx = std::sqrt(x);
  double lx = std::log(x);
  double llx = std::log(lx);
  AsymptoticTerms t{};
  t.c = 0.5 * lx + 5.0;
  t.eps = std::pow(lx, 1.5) / (8.0 * rx);
  t.e1 = 0.0013 * rx * lx * llx;
  t.e2 = 0.03 * lx * rx;
  t.e3 = rx * (0.061 * lx + 0.16 * llx * llx + 0.024 - 0.15 * lx * llx -
               0.114 * llx);
  t.e4 = 0.283 * rx * std::pow(lx, 1.5) / std::sqrt(lx + 10.0);
  double ll2x = std::log(std::log(2.0 * x));
  t.e5 = 0.26 * std::pow(lx, 2.5) + 0.51 * lx * ll2x * ll2x + 2.0;
  t.normalized_total = (t.e1 + t.e2 + t.e3 + t.e4 + t.e5) / (rx * lx);
  return t;
}

std::vector<MidrangeRow> midrange_report(
    const std::vector<std::pair<double, double>>& pairs) {
  std::vector<MidrangeRow> rows;
  rows.reserve(pairs.size());
  for (auto [y, delta] : pairs) {
    double ly = std::log(y);
    double rhs = std::exp(-0.125) * std::sqrt(y) / (8.0 * kPi) * ly * (ly - 3.0);
    rows.push_back({y, delta, rhs, delta * y <= rhs});
  }
  return rows;
}

std::string certificate_json(const ChebyshevBoundParams& p,
                             const BoundCertificate& cert) {
  nlohmann::json j;
  j["x0"] = p.x0;
  j["c"] = p.c;
  j["eps"] = p.eps;
  j["alpha"] = p.alpha;
  j["T"] = p.T;
  j["E1"] = cert.E1;
  j["E2"] = cert.E2;
  j["E3"] = cert.E3;
  j["delta0"] = cert.delta0;
  j["valid_from"] = cert.valid_from;
  j["rh_height_required"] = cert.rh_height_required;
  j["zero_data_height_used"] = cert.zero_data_height_used;
  j["tail_bound_used"] = cert.tail_bound_used;
  j["slack"] = cert.slack;
  return j.dump();
}

}  // namespace primebound::bounds
