#pragma once

#include "rieszsum/mobius.hpp"
#include "rieszsum/precision.hpp"
#include "rieszsum/special_functions.hpp"

#include <cmath>
#include <cstdint>
#include <vector>

namespace rieszsum {
namespace detail {

// sum_{n>N} n^{-s} <= N^{1-s}/(s-1), valid for s > 1 (integral bound).
inline double log10_zeta_tail(double s, double n) {
  return (1.0 - s) * std::log10(n) - std::log10(s - 1.0);
}

inline double log10_choose(double k, double j) {
  if (j <= 0 || j >= k) return 0.0;
  return (std::lgamma(k + 1) - std::lgamma(j + 1) - std::lgamma(k - j + 1)) / std::log(10.0);
}

inline double log10_factorial(double j) { return std::lgamma(j + 1) / std::log(10.0); }

struct TailPlan {
  std::uint64_t n_split = 0;  // N: direct summation up to here
  unsigned order = 0;         // J: tail corrected by binomial/Taylor terms 1..J (or 0..J)
  double log10_remainder = 0;
};

// Plan for sums of mu(n) n^{-beta} (1-(1-1/n^a)^k): remainder after the
// order-J binomial correction is C(k,J+1) * tail_zeta(a(J+1)+beta, N),
// valid while the expansion terms still decrease for n > N, i.e.
// (k-J-1)/(J+2) <= (N+1)^a.
inline TailPlan plan_binomial_tail(double k, double a, double beta, double log10_tol,
                                   std::uint64_t n_max) {
  std::uint64_t n = static_cast<std::uint64_t>(8.0 * std::pow(k, 1.0 / a)) + 1;
  if (n < 2000) n = 2000;
  if (n > n_max) n = n_max;
  std::uint64_t needed = n;
  for (;; n = std::min<std::uint64_t>(n * 4, n_max)) {
    for (unsigned J = 1; J <= 48; ++J) {
      double mono = (k - J - 1.0) / (J + 2.0);
      if (mono > std::pow(double(n) + 1, a)) continue;
      double rem = log10_choose(k, J + 1.0) + log10_zeta_tail(a * (J + 1) + beta, double(n));
      if (rem <= log10_tol) return {n, J, rem};
    }
    if (n == n_max) break;
  }
  // estimate a sufficient N at a mid-size order for the error message
  needed = static_cast<std::uint64_t>(
      std::pow(10.0, (log10_choose(k, 9.0) - log10_tol) / (8.0 * a + beta - 1.0)));
  throw resource_error("mobius table too small for requested tolerance", needed);
}

// Plan for sums of mu(n) n^{-beta} exp(-x/n^a): remainder after the
// order-J Taylor correction is x^{J+1}/(J+1)! * tail_zeta(a(J+1)+beta, N),
// valid while x/(N+1)^a <= J+2.
inline TailPlan plan_exp_tail(double x, double a, double beta, double log10_tol,
                              std::uint64_t n_max) {
  std::uint64_t n = static_cast<std::uint64_t>(8.0 * std::pow(std::max(x, 1.0), 1.0 / a)) + 1;
  if (n < 2000) n = 2000;
  if (n > n_max) n = n_max;
  for (;; n = std::min<std::uint64_t>(n * 4, n_max)) {
    for (unsigned J = 0; J <= 48; ++J) {
      if (x / std::pow(double(n) + 1, a) > J + 2.0) continue;
      double rem = (J + 1.0) * std::log10(std::max(x, 1e-300)) - log10_factorial(J + 1.0) +
                   log10_zeta_tail(a * (J + 1) + beta, double(n));
      if (x == 0) rem = -10000;
      if (rem <= log10_tol) return {n, J, rem};
    }
    if (n == n_max) break;
  }
  throw resource_error("mobius table too small for requested tolerance",
                       static_cast<std::uint64_t>(16.0 * std::pow(std::max(x, 1.0), 1.0 / a)));
}

// One pass over n <= N. For every n with a nonzero weight, calls
// direct_factor(n, q) with q = n^{-a} and accumulates
//   direct += w(n) * n^{-beta} * direct_factor(n, q)
//   ps[j]  += w(n) * n^{-beta} * q^j          (j = 0..J)
// where w(n) = mu(n) when mobius_weights, else 1 (table may be null then).
template <typename DirectFactor>
inline void weighted_power_pass(const MobiusTable* table, std::uint64_t n_split, const Real& a,
                                const Real& beta, unsigned order, bool mobius_weights,
                                DirectFactor&& direct_factor, Real& direct,
                                std::vector<Real>& ps) {
  bool a_int = (a == floor(a)) && a <= 64;
  bool beta_int = (beta == floor(beta)) && abs(beta) <= 64;
  long ai = a_int ? static_cast<long>(a) : 0;
  long bi = beta_int ? static_cast<long>(beta) : 0;
  direct = 0;
  ps.assign(order + 1, Real(0));
  for (std::uint64_t n = 1; n <= n_split; ++n) {
    int w = 1;
    if (mobius_weights) {
      w = table->mu(n);
      if (w == 0) continue;
    }
    Real rn(n);
    Real q = a_int ? 1 / pow(rn, ai) : pow(rn, -a);
    Real wb = beta_int ? (bi >= 0 ? 1 / pow(rn, bi) : pow(rn, -bi)) : pow(rn, -beta);
    if (w < 0) wb = -wb;
    direct += wb * direct_factor(n, q);
    Real p = wb;
    ps[0] += p;
    for (unsigned j = 1; j <= order; ++j) {
      p *= q;
      ps[j] += p;
    }
  }
}

// 1/zeta(s) (or zeta(s) itself) at the given exponent, routed through
// the exact even-integer path when possible.
inline Real zeta_at(const Real& s, bool inverse, unsigned digits) {
  PrecisionContext inner(std::max(digits, 30u), pow10(-static_cast<int>(std::max(digits, 30u)) + 12));
  Real z;
  if (s == floor(s) && s >= 2 && static_cast<long>(s) % 2 == 0)
    z = zeta_even(static_cast<unsigned>(static_cast<long>(s) / 2), inner);
  else
    z = zeta_real(s, inner);
  return inverse ? 1 / z : z;
}

}  // namespace detail

// sum_{n=1}^inf mu(n) n^{-beta} (1 - (1-1/n^a)^k), evaluated as a direct
// sum to N plus binomial tail corrections through zeta values:
//   tail = sum_{j=1}^{J} (-1)^{j+1} C(k,j) Z_{aj+beta}(N),
//   Z_s(N) = 1/zeta(s) - sum_{n<=N} mu(n) n^{-s}.
// Requires a*1+beta > 1 so every correction exponent converges.
inline SeriesResult mobius_binomial_sum(std::uint64_t k, const Real& a_in, const Real& beta_in,
                                        const MobiusTable& table, const PrecisionContext& ctx,
                                        Method tag) {
  Real a = a_in, beta = beta_in;
  SeriesResult out;
  out.method = tag;
  if (k == 0) {
    out.value = 0;
    out.error_bound = 0;
    out.terms_used = 1;
    return out;
  }
  if (!(a + beta > 1))
    throw std::domain_error("mobius_binomial_sum: correction exponents do not converge");
  double tol_log10 = static_cast<double>(log10(ctx.tol)) - 0.5;
  auto plan = detail::plan_binomial_tail(double(k), double(a), double(beta), tol_log10,
                                         table.n_max);
  unsigned P = ctx.digits +
               static_cast<unsigned>(std::ceil(detail::log10_choose(double(k), plan.order))) +
               static_cast<unsigned>(std::ceil(std::log10(double(plan.n_split)))) + 15;
  PrecisionGuard guard(P);
  a = at_precision(a, P);
  beta = at_precision(beta, P);
  double skip = P * std::log(10.0);  // (1-q)^k below 10^-P contributes as 1
  Real direct;
  std::vector<Real> ps;
  detail::weighted_power_pass(
      &table, plan.n_split, a, beta, plan.order, true,
      [&](std::uint64_t n, const Real& q) -> Real {
        if (n == 1) return 1;
        if (double(k) * double(q) > skip) return 1;
        return 1 - pow(1 - q, static_cast<unsigned long>(k));
      },
      direct, ps);
  Real tail = 0;
  Int binom(1);
  for (unsigned j = 1; j <= plan.order; ++j) {
    binom = binom * (k - j + 1) / j;
    Real z = detail::zeta_at(a * j + beta, true, P);
    Real term = Real(binom) * (z - ps[j]);
    tail += (j % 2 == 1) ? term : -term;
  }
  out.value = direct + tail;
  out.error_bound = pow(Real(10), Real(plan.log10_remainder)) + pow10(-static_cast<int>(ctx.digits) - 2);
  out.terms_used = plan.n_split + plan.order;
  return out;
}

// sum over n of w(n) n^{-beta} exp(-x/n^a) with w = mu (zsum = 1/zeta)
// or w = 1 (zsum = zeta), via direct sum to N plus Taylor corrections:
//   tail = sum_{j=0}^{J} (-x)^j/j! * Z_{aj+beta}(N).
// Requires beta > 1 (the j = 0 correction exponent).
inline SeriesResult weighted_exp_sum(const Real& x_in, const Real& a_in, const Real& beta_in,
                                     const MobiusTable* table, bool mobius_weights,
                                     const PrecisionContext& ctx, Method tag) {
  Real x = x_in, a = a_in, beta = beta_in;
  if (!(beta > 1)) throw std::domain_error("weighted_exp_sum: needs beta > 1");
  if (!(x >= 0)) throw std::domain_error("weighted_exp_sum: needs x >= 0");
  SeriesResult out;
  out.method = tag;
  double xd = static_cast<double>(x);
  double tol_log10 = static_cast<double>(log10(ctx.tol)) - 0.5;
  std::uint64_t n_max = table ? table->n_max : kMobiusDefaultCeiling;
  auto plan = detail::plan_exp_tail(xd, double(a), double(beta), tol_log10, n_max);
  double amp = 0;  // max_j log10(x^j / j!)
  for (unsigned j = 1; j <= plan.order; ++j)
    amp = std::max(amp, j * std::log10(std::max(xd, 1.0)) - detail::log10_factorial(j));
  unsigned P = ctx.digits + static_cast<unsigned>(std::ceil(amp)) +
               static_cast<unsigned>(std::ceil(std::log10(double(plan.n_split)))) + 15;
  PrecisionGuard guard(P);
  x = at_precision(x, P);
  a = at_precision(a, P);
  beta = at_precision(beta, P);
  double skip = P * std::log(10.0);
  Real direct;
  std::vector<Real> ps;
  detail::weighted_power_pass(
      table, plan.n_split, a, beta, plan.order, mobius_weights,
      [&](std::uint64_t n, const Real& q) -> Real {
        (void)n;
        if (xd * double(q) > skip) return 0;
        return exp(-x * q);
      },
      direct, ps);
  Real tail = 0;
  Real coeff = 1;  // (-x)^j / j!
  for (unsigned j = 0; j <= plan.order; ++j) {
    if (j > 0) coeff *= -x / j;
    Real z = detail::zeta_at(a * j + beta, mobius_weights, P);
    tail += coeff * (z - ps[j]);
  }
  out.value = direct + tail;
  out.error_bound = pow(Real(10), Real(plan.log10_remainder)) + pow10(-static_cast<int>(ctx.digits) - 2);
  out.terms_used = plan.n_split + plan.order + 1;
  return out;
}

}  // namespace rieszsum
