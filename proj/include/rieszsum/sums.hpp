#pragma once

#include "rieszsum/baezduarte.hpp"
#include "rieszsum/precision.hpp"
#include "rieszsum/special_functions.hpp"
#include "rieszsum/tail_sums.hpp"

#include <cmath>
#include <cstdint>
#include <vector>

namespace rieszsum {

namespace detail {

inline void check_generating_domain(const Real& t) {
  if (t < -1 || !(t < Real(1) / 2))
    throw std::domain_error("generating function: t must lie in [-1, 1/2)");
}

}  // namespace detail

// Right side of the generating identity:
//   (1/(1-t)) sum_{k>=0} (-t/(1-t))^k / zeta(2k+2),
// truncated at order J (J = 0 picks the order from the geometric tail).
inline SeriesResult generating_function_rhs(const Real& t_in, std::size_t terms,
                                            const PrecisionContext& ctx) {
  detail::check_generating_domain(t_in);
  unsigned P = ctx.digits + 15;
  PrecisionGuard guard(P);
  Real t = at_precision(t_in, P);
  PrecisionContext inner(P, pow10(-static_cast<int>(P) + 12));
  Real one_minus_t = 1 - t;
  Real r = -t / one_minus_t;
  Real ar = abs(r);
  std::size_t J = terms;
  if (J == 0) {
    // |r|^{J+1}/((1-|r|)(1-t)) <= tol/2
    double lr = std::log10(static_cast<double>(ar) + 1e-300);
    double target = static_cast<double>(log10(ctx.tol)) - 0.5 +
                    std::log10((1 - static_cast<double>(ar)) * static_cast<double>(one_minus_t));
    J = (t == 0) ? 1 : static_cast<std::size_t>(target / lr) + 2;
  }
  Real sum = 0;
  Real rk = 1;
  for (std::size_t k = 0; k <= J; ++k) {
    sum += rk / zeta_even(static_cast<unsigned>(k) + 1, inner);
    rk *= r;
  }
  SeriesResult out;
  out.method = Method::direct;
  out.value = sum / one_minus_t;
  out.error_bound = pow(ar, static_cast<unsigned long>(J + 1)) / ((1 - ar) * one_minus_t) +
                    pow10(-static_cast<int>(ctx.digits) - 2);
  out.terms_used = J + 1;
  return out;
}

// Left side sum_{k>=0} c_k t^k, summed over n instead of k via the
// closed form sum_n mu(n)/(t + (1-t) n^2): direct part to N, then the
// geometric expansion of each tail denominator through Z_{2j+2}(N).
inline SeriesResult generating_function_lhs(const Real& t_in, std::size_t order,
                                            const MobiusTable& table,
                                            const PrecisionContext& ctx) {
  detail::check_generating_domain(t_in);
  Real t = t_in;
  Real one_minus_t = 1 - t;
  double lr = std::log10(std::max(static_cast<double>(abs(t) / one_minus_t), 1e-300));
  double tol_log10 = static_cast<double>(log10(ctx.tol)) - 0.5;
  std::uint64_t N = std::min<std::uint64_t>(table.n_max, 2000);
  unsigned J = static_cast<unsigned>(order);
  double rem = 0;
  if (order == 0) {
    for (J = 1; J <= 60; ++J) {
      rem = (J + 1.0) * lr - std::log10(static_cast<double>(one_minus_t)) + 0.31 +
            detail::log10_zeta_tail(2.0 * J + 4, double(N));
      if (rem <= tol_log10) break;
    }
  } else {
    rem = (J + 1.0) * lr - std::log10(static_cast<double>(one_minus_t)) + 0.31 +
          detail::log10_zeta_tail(2.0 * J + 4, double(N));
  }
  unsigned P = ctx.digits + static_cast<unsigned>(std::ceil(std::log10(double(N)))) + 15;
  PrecisionGuard guard(P);
  Real tw = at_precision(t, P);
  Real omt = 1 - tw;
  Real direct;
  std::vector<Real> ps;
  detail::weighted_power_pass(
      &table, N, Real(2), Real(2), J, true,
      [&](std::uint64_t, const Real& q) -> Real { return 1 / (omt + tw * q); }, direct, ps);
  Real tail = 0;
  Real coeff = 1 / omt;  // (-t)^j / (1-t)^{j+1}
  for (unsigned j = 0; j <= J; ++j) {
    Real z = detail::zeta_at(Real(2 * j + 2), true, P);
    tail += coeff * (z - ps[j]);
    coeff *= -tw / omt;
  }
  SeriesResult out;
  out.method = Method::moebius;
  out.value = direct + tail;
  out.error_bound = pow(Real(10), Real(rem)) + pow10(-static_cast<int>(ctx.digits) - 2);
  out.terms_used = N + J + 1;
  return out;
}

// sum_{k>=1} 2^{-k} / zeta(2k), to the requested number of digits.
inline SeriesResult alternating_sum_constant(unsigned digits) {
  unsigned P = digits + 15;
  PrecisionGuard guard(P);
  PrecisionContext inner(std::max(P, 30u), pow10(-static_cast<int>(std::max(P, 30u)) + 12));
  std::size_t K = static_cast<std::size_t>((digits + 12) / 0.30102999566398119) + 2;
  Real sum = 0;
  Real half_k = Real(1) / 2;
  for (std::size_t k = 1; k <= K; ++k) {
    sum += half_k / zeta_even(static_cast<unsigned>(k), inner);
    half_k /= 2;
  }
  SeriesResult out;
  out.method = Method::direct;
  out.value = sum;
  out.error_bound = 2 * half_k;  // geometric tail, zeta(2k) > 1
  out.terms_used = K;
  return out;
}

// Same constant through the Abel-summed series
//   1 + sum_{k>=1} (1 - 2^{-k}) (1/zeta(2k) - 1/zeta(2k+2)).
inline SeriesResult alternating_sum_constant_abel(unsigned digits) {
  unsigned P = digits + 15;
  PrecisionGuard guard(P);
  PrecisionContext inner(std::max(P, 30u), pow10(-static_cast<int>(std::max(P, 30u)) + 12));
  Real eps = pow10(-static_cast<int>(digits) - 6);
  Real sum = 1;
  Real half_k = Real(1) / 2;
  std::size_t k = 1;
  Real gap;
  for (;; ++k) {
    Real za = zeta_even(static_cast<unsigned>(k), inner);
    Real zb = zeta_even(static_cast<unsigned>(k) + 1, inner);
    gap = 1 / za - 1 / zb;
    sum += (1 - half_k) * gap;
    half_k /= 2;
    // |1/zeta(2k) - 1/zeta(2k+2)| <= zeta(2k) - zeta(2k+2) < 3 * 4^{-k}
    if (3 * pow(Real(4), -static_cast<long>(k)) < eps) break;
  }
  SeriesResult out;
  out.method = Method::abel;
  out.value = sum;
  out.error_bound = 3 * pow(Real(4), -static_cast<long>(k)) * 2;
  out.terms_used = k;
  return out;
}

// Exact partial sum sum_{j=0}^{k-1} (-1)^j c_j.
inline SeriesResult alternating_partial_sum(std::uint64_t k, const MobiusTable& table,
                                            const PrecisionContext& ctx) {
  if (k < 1) throw std::domain_error("alternating_partial_sum: k must be >= 1");
  PrecisionGuard guard(ctx.digits + 15);
  unsigned extra = static_cast<unsigned>(std::ceil(std::log10(2.0 * double(k)))) + 1;
  PrecisionContext inner(ctx.digits + extra, ctx.tol / (2 * static_cast<long>(k)));
  Real sum = 0, err = 0;
  std::size_t terms = 0;
  for (std::uint64_t j = 0; j < k; ++j) {
    SeriesResult c = ck_moebius(j, RieszParams{}, table, inner);
    sum += (j % 2 == 0) ? c.value : -c.value;
    err += c.error_bound;
    terms += c.terms_used;
  }
  return {sum, err, terms, Method::moebius, true};
}

struct SumSweepPoint {
  std::uint64_t k;
  SeriesResult partial_sum;  // S_{k-1} = sum_{i=0}^{k-1} c_i
  Real deviation;            // partial_sum - center, center = 1/zeta(0) = -2
};

// S_{k-1} = sum_n mu(n) (1 - (1-1/n^2)^k), with the binomial tail
// scheme; the center -2 is always computed as 1/zeta(0).
inline SumSweepPoint partial_sum_sk(std::uint64_t k, const MobiusTable& table,
                                    const PrecisionContext& ctx) {
  if (k < 1) throw std::domain_error("partial_sum_sk: k must be >= 1");
  SeriesResult s = mobius_binomial_sum(k, Real(2), Real(0), table, ctx, Method::moebius);
  PrecisionGuard guard(ctx.digits + 15);
  Real center = 1 / zeta_real(Real(0), ctx);
  return {k, s, s.value - center};
}

struct SkCrossing {
  std::uint64_t k_before;  // last k with S_k + 2 > 0
  std::uint64_t k_after;   // first k with S_k + 2 <= 0
};

// Scan S_k + 2 on a geometric grid, then bisect on the integer index.
inline SkCrossing find_sk_crossing(std::uint64_t k_lo, std::uint64_t k_hi,
                                   const MobiusTable& table, const PrecisionContext& ctx,
                                   std::size_t scan_points = 24) {
  auto dev = [&](std::uint64_t k) { return partial_sum_sk(k, table, ctx).deviation; };
  std::uint64_t prev_k = k_lo;
  Real prev_d = dev(k_lo);
  if (!(prev_d > 0)) throw bracket_error("find_sk_crossing: already non-positive at k_lo");
  double ratio = std::pow(double(k_hi) / double(k_lo), 1.0 / double(scan_points));
  std::uint64_t lo = 0, hi = 0;
  for (std::size_t i = 1; i <= scan_points; ++i) {
    auto k = static_cast<std::uint64_t>(std::llround(double(k_lo) * std::pow(ratio, double(i))));
    if (k <= prev_k) k = prev_k + 1;
    if (k > k_hi) k = k_hi;
    Real d = dev(k);
    if (d <= 0) {
      lo = prev_k;
      hi = k;
      break;
    }
    prev_k = k;
    prev_d = d;
    if (k == k_hi) break;
  }
  if (hi == 0) throw bracket_error("find_sk_crossing: no sign change in range");
  while (hi - lo > 1) {
    std::uint64_t mid = lo + (hi - lo) / 2;
    if (dev(mid) > 0)
      lo = mid;
    else
      hi = mid;
  }
  return {lo, hi};
}

// Model of S_k + 2 from the zero expansion: the oscillatory part has
// amplitude O(k^{1/4}); the trivial zero rho = -2 adds the monotone
// +2 pi^2 / (zeta(3) k), which dominates until k ~ 1e5.
inline double oscillation_model(std::uint64_t k, const std::vector<ZetaZeroTerm>& zeros) {
  if (k < 2) throw std::domain_error("oscillation_model: k must be >= 2");
  if (zeros.empty()) throw std::domain_error("oscillation_model: empty zero table");
  double lk = std::log(double(k));
  double acc = 0;
  for (const auto& z : zeros) {
    double phase = z.gamma * lk / 2;
    double denom = 0.25 + z.gamma * z.gamma;
    acc += 2 *
           ((z.A + 2 * z.B * z.gamma) * std::cos(phase) -
            (z.B - 2 * z.A * z.gamma) * std::sin(phase)) /
           denom;
  }
  constexpr double zeta3 = 1.2020569031595943;
  double trivial = 2 * 9.869604401089358 / (zeta3 * double(k));
  return std::pow(double(k), 0.25) * acc + trivial;
}

struct ConjecturePoint {
  std::uint64_t k;
  SeriesResult sum;  // sum_n mu(n)/n^{b-a} (1 - (1-1/n^a)^k)
  Real center;       // 1/zeta(b-a)
};

// Conjectured oscillation of the generalized partial sums around
// 1/zeta(b-a); the caller inspects the deviations empirically.
inline std::vector<ConjecturePoint> conjecture_explorer(const Real& a_in, const Real& b_in,
                                                        const std::vector<std::uint64_t>& k_list,
                                                        const MobiusTable& table,
                                                        const PrecisionContext& ctx) {
  if (!(a_in > 0) || b_in < a_in) throw std::domain_error("conjecture_explorer: need b >= a > 0");
  if (b_in - a_in == 1) throw pole_error("conjecture_explorer: center 1/zeta(1) undefined");
  PrecisionGuard guard(ctx.digits + 15);
  Real a = at_precision(a_in, ctx.digits + 15);
  Real b = at_precision(b_in, ctx.digits + 15);
  Real center = 1 / zeta_real(b - a, ctx);
  std::vector<ConjecturePoint> out;
  out.reserve(k_list.size());
  for (auto k : k_list)
    out.push_back({k, mobius_binomial_sum(k, a, b - a, table, ctx, Method::moebius), center});
  return out;
}

}  // namespace rieszsum
