#pragma once

#include "rieszsum/baezduarte.hpp"
#include "rieszsum/precision.hpp"
#include "rieszsum/riesz.hpp"
#include "rieszsum/special_functions.hpp"
#include "rieszsum/tail_sums.hpp"

#include <cmath>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace rieszsum {

// A bound check passes only if |lhs| + lhs_error_bound <= rhs for every
// sample, so truncation error can never mask a violation.
struct BoundReport {
  std::string name;
  std::size_t samples_checked = 0;
  double max_ratio = 0;  // max over samples of (|lhs| + err) / rhs
  bool passed = false;

  void record(const Real& lhs_with_err, const Real& rhs) {
    ++samples_checked;
    double r = (rhs > 0) ? static_cast<double>(lhs_with_err / rhs)
                         : (lhs_with_err > 0 ? 1e300 : 0.0);
    if (r > max_ratio) max_ratio = r;
  }
  void finalize() { passed = max_ratio <= 1.0; }
};

// Geometric sample grid, default 25 points per decade.
inline std::vector<double> geometric_grid(double lo, double hi, double per_decade = 25) {
  std::vector<double> g;
  double steps = std::log10(hi / lo) * per_decade;
  auto n = static_cast<std::size_t>(std::ceil(steps)) + 1;
  for (std::size_t i = 0; i < n; ++i)
    g.push_back(lo * std::pow(hi / lo, double(i) / double(n - 1)));
  return g;
}

// Corollary-1 inequality:
//   sum n^{-b} e^{-x/n^a} <= J_ab x^{(1-b)/a} + (b/(ea))^{b/a} x^{-b/a}.
inline BoundReport check_corollary1(const Real& a_in, const Real& b_in,
                                    const std::vector<Real>& x_list,
                                    const PrecisionContext& ctx) {
  if (!(b_in > 1) || !(a_in > 0)) throw std::domain_error("check_corollary1: need b > 1, a > 0");
  BoundReport rep;
  rep.name = "corollary1(a=" + a_in.str(3) + ",b=" + b_in.str(3) + ")";
  PrecisionGuard guard(ctx.digits + 15);
  Real a = at_precision(a_in, ctx.digits + 15);
  Real b = at_precision(b_in, ctx.digits + 15);
  Real jab = j_ab(a, b, ctx);
  Real second_coeff = pow(b / (exp(Real(1)) * a), b / a);
  for (const Real& x_raw : x_list) {
    if (!(x_raw > 0)) throw std::domain_error("check_corollary1: x must be positive");
    Real x = at_precision(x_raw, ctx.digits + 15);
    SeriesResult lhs = weighted_exp_sum(x, a, b, nullptr, false, ctx, Method::direct);
    Real rhs = jab * pow(x, (1 - b) / a) + second_coeff * pow(x, -b / a);
    rep.record(abs(lhs.value) + lhs.error_bound, rhs);
  }
  rep.finalize();
  return rep;
}

// Corollary-2 special case: |R(x)| <= (1/2) sqrt(pi) x^{1/2} + 1/e.
inline BoundReport check_corollary2(const std::vector<Real>& x_list, const MobiusTable& table,
                                    const PrecisionContext& ctx) {
  BoundReport rep;
  rep.name = "corollary2";
  PrecisionGuard guard(ctx.digits + 15);
  Real sqrt_pi = sqrt(const_pi(ctx.digits + 15));
  Real inv_e = exp(Real(-1));
  for (const Real& x_raw : x_list) {
    Real x = at_precision(x_raw, ctx.digits + 15);
    SeriesResult r = riesz_kummer(x, table, ctx);
    Real rhs = sqrt_pi / 2 * sqrt(x) + inv_e;
    rep.record(abs(r.value) + r.error_bound, rhs);
  }
  rep.finalize();
  return rep;
}

namespace detail {

// Four-term explicit right side of the |R(k)/k - c_k| bound.
inline Real lemma3_four_term_rhs(const Real& k, const Real& sqrt_pi) {
  return Real(3) / 16 * sqrt_pi * pow(k, Real(-3) / 2) +
         Real(27) / 2 * exp(Real(-3)) / (k * k) +
         Real(15) / 32 * sqrt_pi * pow(k, Real(-5) / 2) +
         128 * exp(Real(-4)) / (k * k * k);
}

inline std::pair<Real, Real> r_over_k_minus_ck(std::uint64_t k, const MobiusTable& table,
                                               const PrecisionContext& ctx) {
  Real rk(static_cast<unsigned long>(k));
  SeriesResult r = riesz_kummer(rk, table, ctx);
  SeriesResult c = ck_moebius(k, RieszParams{}, table, ctx);
  Real diff = abs(r.value / rk - c.value);
  Real err = r.error_bound / rk + c.error_bound;
  return {diff, err};
}

}  // namespace detail

// |R(k)/k - c_k| against the simplified (3/16) sqrt(pi) k^{-3/2} bound
// for k > 16, and against the four-term explicit bound for k <= 16.
inline BoundReport check_lemma3(const std::vector<std::uint64_t>& k_list,
                                const MobiusTable& table, const PrecisionContext& ctx) {
  BoundReport rep;
  rep.name = "lemma3";
  PrecisionGuard guard(ctx.digits + 15);
  Real sqrt_pi = sqrt(const_pi(ctx.digits + 15));
  for (auto k : k_list) {
    if (k < 1) throw std::domain_error("check_lemma3: k must be >= 1");
    auto [diff, err] = detail::r_over_k_minus_ck(k, table, ctx);
    Real rk(static_cast<unsigned long>(k));
    Real rhs = (k > 16) ? Real(3) / 16 * sqrt_pi * pow(rk, Real(-3) / 2)
                        : detail::lemma3_four_term_rhs(rk, sqrt_pi);
    rep.record(diff + err, rhs);
  }
  rep.finalize();
  return rep;
}

// The four-term explicit bound, valid for every k >= 1.
inline BoundReport check_lemma3_explicit(const std::vector<std::uint64_t>& k_list,
                                         const MobiusTable& table, const PrecisionContext& ctx) {
  BoundReport rep;
  rep.name = "lemma3_explicit";
  PrecisionGuard guard(ctx.digits + 15);
  Real sqrt_pi = sqrt(const_pi(ctx.digits + 15));
  for (auto k : k_list) {
    auto [diff, err] = detail::r_over_k_minus_ck(k, table, ctx);
    rep.record(diff + err, detail::lemma3_four_term_rhs(Real(static_cast<unsigned long>(k)), sqrt_pi));
  }
  rep.finalize();
  return rep;
}

// Lemma-4 difference quotient:
// |R(x)/x - R(y)/y| <= (y-x) (sqrt(pi)/4 x^{-3/2} + 4 e^{-2} x^{-2}).
inline BoundReport check_lemma4(const std::vector<std::pair<Real, Real>>& pairs,
                                const MobiusTable& table, const PrecisionContext& ctx) {
  BoundReport rep;
  rep.name = "lemma4";
  PrecisionGuard guard(ctx.digits + 15);
  Real sqrt_pi = sqrt(const_pi(ctx.digits + 15));
  for (const auto& [x_raw, y_raw] : pairs) {
    if (!(x_raw > 0) || y_raw < x_raw) throw std::domain_error("check_lemma4: need 0 < x <= y");
    Real x = at_precision(x_raw, ctx.digits + 15);
    Real y = at_precision(y_raw, ctx.digits + 15);
    if (x == y) {
      ++rep.samples_checked;  // degenerate: both sides exactly zero
      continue;
    }
    SeriesResult rx = riesz_kummer(x, table, ctx);
    SeriesResult ry = riesz_kummer(y, table, ctx);
    Real lhs = abs(rx.value / x - ry.value / y);
    Real err = rx.error_bound / x + ry.error_bound / y;
    Real rhs = (y - x) * (sqrt_pi / 4 * pow(x, Real(-3) / 2) + 4 * exp(Real(-2)) / (x * x));
    rep.record(lhs + err, rhs);
  }
  rep.finalize();
  return rep;
}

struct PowerLawFit {
  double prefactor;
  double exponent;
  std::size_t samples;
};

// Least-squares fit of log10 y against log10 x.
inline PowerLawFit fit_power_law(const std::vector<std::pair<double, double>>& data) {
  if (data.size() < 3) throw std::runtime_error("fit_power_law: need at least 3 samples");
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (auto [x, y] : data) {
    double lx = std::log10(x), ly = std::log10(y);
    sx += lx;
    sy += ly;
    sxx += lx * lx;
    sxy += lx * ly;
  }
  double n = double(data.size());
  double slope = (n * sxy - sx * sy) / (n * sxx - sx * sx);
  double intercept = (sy - slope * sx) / n;
  return {std::pow(10.0, intercept), slope, data.size()};
}

// Fit of |R(k)/k - c_k| over log-spaced k; samples where the measured
// difference is smaller than its own error bound are dropped.
inline PowerLawFit fit_difference_exponent(std::uint64_t k_lo, std::uint64_t k_hi,
                                           std::size_t samples, const MobiusTable& table,
                                           const PrecisionContext& ctx) {
  if (k_lo < 17) throw std::domain_error("fit_difference_exponent: k_lo must be >= 17");
  std::vector<std::pair<double, double>> data;
  std::uint64_t prev = 0;
  for (std::size_t i = 0; i < samples; ++i) {
    double t = double(i) / double(samples - 1);
    auto k = static_cast<std::uint64_t>(
        std::llround(double(k_lo) * std::pow(double(k_hi) / double(k_lo), t)));
    if (k <= prev) continue;
    prev = k;
    auto [diff, err] = detail::r_over_k_minus_ck(k, table, ctx);
    if (!(diff > 4 * err)) continue;  // difference lost under truncation error
    data.emplace_back(double(k), static_cast<double>(diff));
  }
  return fit_power_law(data);
}

struct Theorem1Report {
  double delta;
  double sup_ck_normalized;  // sup |c_k| k^{-delta}
  double sup_rk_normalized;  // sup |R(k)| k^{-delta-1}
  double ratio;              // of the two sups
  std::size_t samples;
};

// Empirical shadow of the equivalence R(x) = O(x^{delta+1}) <=> c_k =
// O(k^delta): both normalized sequences over sampled k, and their ratio.
inline Theorem1Report theorem1_witness(double delta, std::uint64_t k_hi,
                                       const MobiusTable& table, const PrecisionContext& ctx) {
  if (!(delta > -1.5)) throw std::domain_error("theorem1_witness: delta must exceed -3/2");
  Theorem1Report rep{delta, 0, 0, 0, 0};
  for (double kd : geometric_grid(32, double(k_hi), 25)) {
    auto k = static_cast<std::uint64_t>(std::llround(kd));
    SeriesResult c = ck_moebius(k, RieszParams{}, table, ctx);
    SeriesResult r = riesz_kummer(Real(static_cast<unsigned long>(k)), table, ctx);
    double nc = std::abs(static_cast<double>(c.value)) * std::pow(double(k), -delta);
    double nr = std::abs(static_cast<double>(r.value)) * std::pow(double(k), -delta - 1);
    rep.sup_ck_normalized = std::max(rep.sup_ck_normalized, nc);
    rep.sup_rk_normalized = std::max(rep.sup_rk_normalized, nr);
    ++rep.samples;
  }
  rep.ratio = rep.sup_ck_normalized / rep.sup_rk_normalized;
  return rep;
}

}  // namespace rieszsum
