#pragma once

#include "rieszsum/precision.hpp"
#include "rieszsum/special_functions.hpp"
#include "rieszsum/tail_sums.hpp"

#include <cmath>
#include <cstdint>
#include <utility>
#include <vector>

namespace rieszsum {

struct RieszParams {
  Real a{2};
  Real b{2};

  RieszParams() = default;
  RieszParams(const Real& a_, const Real& b_) : a(a_), b(b_) {
    if (!(a > 0)) throw std::domain_error("RieszParams: a must be positive");
  }
  // Corollary-1 hypothesis; b <= 1 evaluations are best-effort only.
  bool absolutely_convergent() const { return b > 1; }
};

// Largest working precision the naive series is allowed to request
// before deferring to the accelerated method.
inline constexpr unsigned kNaiveDigitsCap = 4000;

// Direct evaluation of x * sum (-x)^k / (k! zeta(2k+2)). The peak term is
// about e^{|x|}, so the working precision is raised by x*log10(e) to absorb
// the cancellation. Negative x is allowed (no cancellation there); it only
// exists to test the x e^{-x} limit.
inline SeriesResult riesz_naive(const Real& x_in, const PrecisionContext& ctx) {
  double xd = static_cast<double>(x_in);
  unsigned P = ctx.digits + 20;
  if (xd > 0) P += static_cast<unsigned>(std::ceil(xd * 0.43429448190325176));
  if (P > kNaiveDigitsCap)
    throw precision_error("riesz_naive: x too large for the precision budget; use riesz_kummer");
  PrecisionGuard guard(P);
  Real x = at_precision(x_in, P);
  PrecisionContext inner(P, pow10(-static_cast<int>(P) + 12));
  SeriesResult out;
  out.method = Method::naive;
  if (x == 0) {
    out.value = 0;
    out.error_bound = 0;
    out.terms_used = 1;
    return out;
  }
  Real stop = ctx.tol / 8;
  Real u = x;  // x * (-x)^k / k!
  Real sum = 0;
  double ax = std::fabs(xd);
  std::size_t k = 0;
  for (;; ++k) {
    sum += u / zeta_even(static_cast<unsigned>(k) + 1, inner);
    u *= -x / static_cast<long>(k + 1);
    if (abs(u) < stop && double(k) >= 2 * ax + 4) break;
  }
  out.value = sum;
  // terms past the cutoff alternate (x>0) with ratio < 1/2; for x<0 the
  // remainder is a geometric tail with the same ratio
  out.error_bound = 2 * abs(u) + pow10(-static_cast<int>(ctx.digits) - 2);
  out.terms_used = k + 1;
  return out;
}

// Accelerated form R(x) = x (6/pi^2 + sum mu(n)/n^2 (e^{-x/n^2} - 1)),
// evaluated through the shared Taylor-corrected pass.
inline SeriesResult riesz_kummer(const Real& x, const MobiusTable& table,
                                 const PrecisionContext& ctx) {
  if (!(x >= 0)) throw std::domain_error("riesz_kummer: x must be >= 0");
  if (x == 0) return {Real(0), Real(0), 1, Method::kummer, true};
  unsigned extra = static_cast<unsigned>(std::ceil(std::log10(2 * static_cast<double>(x) + 2)));
  PrecisionContext inner(ctx.digits + extra, ctx.tol / (2 * abs(x) + 1));
  SeriesResult g = weighted_exp_sum(x, Real(2), Real(2), &table, true, inner, Method::kummer);
  g.value *= x;
  g.error_bound *= x;
  g.error_bound += pow10(-static_cast<int>(ctx.digits) - 2);
  return g;
}

// Generalized R_ab(x) = x * sum mu(n)/n^b exp(-x/n^a). Rigorous tail
// bounds need b > 1; the Hardy-Littlewood regime b <= 1 is summed over
// the whole table and flagged non-rigorous.
inline SeriesResult riesz_moebius(const Real& x, const RieszParams& params,
                                  const MobiusTable& table, const PrecisionContext& ctx) {
  if (!(x >= 0)) throw std::domain_error("riesz_moebius: x must be >= 0");
  if (x == 0) return {Real(0), Real(0), 1, Method::moebius, true};
  if (params.absolutely_convergent()) {
    unsigned extra = static_cast<unsigned>(std::ceil(std::log10(2 * static_cast<double>(x) + 2)));
    PrecisionContext inner(ctx.digits + extra, ctx.tol / (2 * abs(x) + 1));
    SeriesResult g =
        weighted_exp_sum(x, params.a, params.b, &table, true, inner, Method::moebius);
    g.value *= x;
    g.error_bound *= x;
    g.error_bound += pow10(-static_cast<int>(ctx.digits) - 2);
    return g;
  }
  // conditionally convergent: plain truncated sum, fluctuation estimate
  PrecisionGuard guard(ctx.digits + 15);
  Real a = at_precision(params.a, ctx.digits + 15);
  Real b = at_precision(params.b, ctx.digits + 15);
  Real xx = at_precision(x, ctx.digits + 15);
  Real sum = 0, checkpoint = 0;
  std::uint64_t half = table.n_max / 2;
  for (std::uint64_t n = 1; n <= table.n_max; ++n) {
    int w = table.mu(n);
    if (w == 0) continue;
    Real term = pow(Real(n), -b) * exp(-xx * pow(Real(n), -a));
    sum += (w > 0) ? term : -term;
    if (n == half) checkpoint = sum;
  }
  SeriesResult out;
  out.method = Method::moebius;
  out.rigorous = false;
  out.value = x * sum;
  out.error_bound = x * (abs(sum - checkpoint) + pow(Real(table.n_max), 1 - params.b));
  out.terms_used = table.n_max;
  return out;
}

// Root of R in [lo, hi] by bisection on the naive series.
inline Real find_first_zero(const Real& bracket_lo, const Real& bracket_hi,
                            const PrecisionContext& ctx) {
  unsigned P = ctx.digits + 20;
  PrecisionGuard guard(P);
  PrecisionContext inner(ctx.digits, ctx.tol);
  Real lo = at_precision(bracket_lo, P), hi = at_precision(bracket_hi, P);
  Real flo = riesz_naive(lo, inner).value;
  Real fhi = riesz_naive(hi, inner).value;
  if (!(flo * fhi < 0)) throw bracket_error("find_first_zero: no sign change in bracket");
  while (hi - lo > ctx.tol) {
    Real mid = (lo + hi) / 2;
    Real fmid = riesz_naive(mid, inner).value;
    if (fmid == 0) return mid;
    if (flo * fmid < 0) {
      hi = mid;
      fhi = fmid;
    } else {
      lo = mid;
      flo = fmid;
    }
  }
  return (lo + hi) / 2;
}

struct SweepPoint {
  Real x;
  SeriesResult result;
};

namespace detail {

inline std::vector<Real> sample_grid(const Real& lo, const Real& hi, std::size_t samples,
                                     bool log_spacing) {
  if (!(lo < hi) || samples < 2) throw std::domain_error("sweep: need lo < hi and samples >= 2");
  std::vector<Real> xs;
  xs.reserve(samples);
  if (log_spacing) {
    if (!(lo > 0)) throw std::domain_error("sweep: log spacing needs lo > 0");
    Real ratio = log(hi / lo) / static_cast<long>(samples - 1);
    for (std::size_t i = 0; i < samples; ++i) xs.push_back(lo * exp(ratio * static_cast<long>(i)));
  } else {
    Real step = (hi - lo) / static_cast<long>(samples - 1);
    for (std::size_t i = 0; i < samples; ++i) xs.push_back(lo + step * static_cast<long>(i));
  }
  xs.back() = hi;  // avoid drift on the endpoint
  return xs;
}

}  // namespace detail

inline std::vector<SweepPoint> riesz_sweep(const Real& x_lo, const Real& x_hi,
                                           std::size_t samples, Method method,
                                           const MobiusTable& table, const PrecisionContext& ctx,
                                           bool log_spacing = false) {
  PrecisionGuard guard(ctx.digits + 10);
  auto xs = detail::sample_grid(at_precision(x_lo, ctx.digits + 10),
                                at_precision(x_hi, ctx.digits + 10), samples, log_spacing);
  std::vector<SweepPoint> out;
  out.reserve(xs.size());
  for (const Real& x : xs) {
    SeriesResult r;
    switch (method) {
      case Method::naive: r = riesz_naive(x, ctx); break;
      case Method::kummer: r = riesz_kummer(x, table, ctx); break;
      case Method::moebius: r = riesz_moebius(x, RieszParams{}, table, ctx); break;
      default: throw std::domain_error("riesz_sweep: unsupported method");
    }
    out.push_back({x, std::move(r)});
  }
  return out;
}

}  // namespace rieszsum
