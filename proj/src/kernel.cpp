#include "primebound/kernel.hpp"

#include <cmath>
#include <numbers>
#include <vector>

#include "internal.hpp"

namespace primebound::kernel {

namespace {

void check_args(double c, double alpha, std::uint32_t k) {
  if (!(c >= 3)) throw std::domain_error("kernel bracket: requires c >= 3");
  if (!(alpha >= 0 && alpha < 1))
    throw std::domain_error("kernel bracket: requires alpha in [0,1)");
  if (k < 1) throw std::domain_error("kernel bracket: requires K >= 1");
}

// Summand weights w_j = I_0(c sqrt(2jh - (jh)^2)) / (2 sinh c) on the nodes
// s_j = 1 - jh, evaluated entirely in scaled space.
std::vector<double> node_weights(double c, double h, std::uint32_t k) {
  std::vector<double> w(k + 1);
  double denom = -std::expm1(-2.0 * c);
  for (std::uint32_t j = 0; j <= k; ++j) {
    double s = j * h;
    double z = c * std::sqrt(std::max(0.0, s * (2.0 - s)));
    w[j] = specfun::bessel_i_scaled(0, z) * std::exp(z - c) / denom;
  }
  return w;
}

template <class Fn>
KernelBracket refine_until(double tol, const Fn& at) {
  KernelBracket b{};
  for (std::uint32_t k = 256;; k *= 2) {
    b = at(k);
    if (b.width() / std::max(b.hi, 1e-30) < tol || k >= (1u << 20)) return b;
  }
}

}  // namespace

KernelBracket mu_bracket(double c, double alpha, std::uint32_t k) {
  check_args(c, alpha, k);
  double h = (1.0 - alpha) / k;
  auto w = node_weights(c, h, k);
  // eta_{c,1} decreases along the nodes s_j = 1 - jh, so the j = 0..K-1 sum
  // underestimates int_alpha^1 and the shifted j = 1..K sum overestimates.
  detail::Kahan lo, hi;
  for (std::uint32_t j = 0; j < k; ++j) lo.add(w[j]);
  for (std::uint32_t j = 1; j <= k; ++j) hi.add(w[j]);
  double lov = detail::certify_down(h * c * lo.sum);
  double hiv = detail::certify_up(h * c * hi.sum);
  // mu is half of a unit mass; the raw upper sum may poke above by O(h)
  return {std::max(0.0, lov), std::min(0.5, hiv), k};
}

KernelBracket nu_bracket(double c, double alpha, std::uint32_t k) {
  check_args(c, alpha, k);
  double h = (1.0 - alpha) / k;
  auto w = node_weights(c, h, k);
  // |nu_c(alpha)| = int_alpha^1 mu_c with mu_c decreasing on the same nodes;
  // nest the mu sums. The inner lower sum at node s_k is sum_{j<k} w_j (the
  // j = k term would overshoot mu(s_k) and break the enclosure).
  detail::Kahan prefix, lo, hi;
  double w0 = w[0];
  for (std::uint32_t j = 0; j + 1 <= k; ++j) {
    prefix.add(w[j]);               // sum_{i<=j} w_i
    if (j + 1 <= k - 1)             // outer k' = j+1 <= K-1, inner j'<k'
      lo.add(prefix.sum);
    hi.add(prefix.sum + w[j + 1] - w0);  // outer k' = j+1, inner 1..k'
  }
  double lov = detail::certify_down(h * h * c * lo.sum);
  double hiv = detail::certify_up(h * h * c * hi.sum);
  return {std::max(0.0, lov), hiv, k};
}

double nu0_exact(double c) {
  if (!(c > 0)) throw std::domain_error("nu0_exact: requires c > 0");
  return specfun::bessel_i_scaled(1, c) / (-std::expm1(-2.0 * c));
}

double decay_constant_D(double c0) {
  if (!(c0 > 0)) throw std::domain_error("decay_constant_D: requires c0 > 0");
  return std::sqrt(2.0 * std::numbers::pi * c0) * nu0_exact(c0);
}

KernelBracket mu_adaptive(double c, double alpha, double tol) {
  return refine_until(tol, [&](std::uint32_t k) { return mu_bracket(c, alpha, k); });
}

KernelBracket nu_adaptive(double c, double alpha, double tol) {
  return refine_until(tol, [&](std::uint32_t k) { return nu_bracket(c, alpha, k); });
}

const KernelBracket& BracketProvider::mu(double c, double alpha) {
  auto key = std::make_pair(c, alpha);
  auto it = mu_cache_.find(key);
  if (it == mu_cache_.end())
    it = mu_cache_.emplace(key, mu_adaptive(c, alpha, tol_)).first;
  return it->second;
}

const KernelBracket& BracketProvider::nu(double c, double alpha) {
  auto key = std::make_pair(c, alpha);
  auto it = nu_cache_.find(key);
  if (it == nu_cache_.end())
    it = nu_cache_.emplace(key, nu_adaptive(c, alpha, tol_)).first;
  return it->second;
}

}  // namespace primebound::kernel
