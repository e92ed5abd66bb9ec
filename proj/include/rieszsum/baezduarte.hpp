#pragma once

#include "rieszsum/precision.hpp"
#include "rieszsum/riesz.hpp"
#include "rieszsum/special_functions.hpp"
#include "rieszsum/tail_sums.hpp"

#include <cmath>
#include <cstdint>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

namespace rieszsum {

// One nontrivial-zero contribution to the large-k expansion of c_{k-1}:
// rho = 1/2 + i*gamma, A + iB = (1/2) Gamma(1 - rho/2) / zeta'(rho).
// The tabulated constants carry the 1/2 from folding the conjugate pair,
// so each pair contributes 2 (A cos - B sin) below.
struct ZetaZeroTerm {
  double gamma;
  double A;
  double B;
};

// First zero with the constants used throughout; further entries are
// user-supplied (computing Gamma(1-rho/2)/zeta'(rho) is out of scope).
inline std::vector<ZetaZeroTerm> default_zero_table() {
  return {{14.134725, 2.0291739e-5, -3.315924e-5}};
}

// Plain text, one zero per line: gamma A B. '#' starts a comment.
inline std::vector<ZetaZeroTerm> load_zero_table(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw format_error("load_zero_table: cannot open " + path);
  std::vector<ZetaZeroTerm> zeros;
  std::string line;
  while (std::getline(in, line)) {
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ss(line);
    ZetaZeroTerm z;
    if (ss >> z.gamma >> z.A >> z.B) {
      if (!(z.gamma > 0)) throw format_error("load_zero_table: gamma must be positive");
      zeros.push_back(z);
    } else {
      std::string tok;
      std::istringstream chk(line);
      if (chk >> tok) throw format_error("load_zero_table: malformed line: " + line);
    }
  }
  return zeros;
}

inline constexpr unsigned kForwardDiffDigitsCap = 3000;

// c_k = sum_{j=0}^k (-1)^j C(k,j) / zeta(2j+2), with exact integer
// binomials and working precision k*log10(2) + guard digits to survive
// the alternating cancellation.
inline SeriesResult ck_forward_diff(std::uint64_t k, const PrecisionContext& ctx) {
  unsigned P = static_cast<unsigned>(std::ceil(double(k) * 0.30102999566398119)) + ctx.digits + 10;
  if (P > kForwardDiffDigitsCap)
    throw precision_error("ck_forward_diff: k beyond the precision ceiling; use ck_moebius");
  PrecisionGuard guard(P);
  PrecisionContext inner(P, pow10(-static_cast<int>(P) + 12));
  Real sum = 0;
  Int binom(1);
  for (std::uint64_t j = 0; j <= k; ++j) {
    Real term = Real(binom) / zeta_even(static_cast<unsigned>(j) + 1, inner);
    sum += (j % 2 == 0) ? term : -term;
    binom = binom * (k - j) / (j + 1);
  }
  SeriesResult out;
  out.value = sum;
  out.error_bound = Real(k + 1) * pow(Real(2), static_cast<unsigned long>(k)) * pow10(-static_cast<int>(P) + 1);
  out.terms_used = k + 1;
  out.method = Method::forward_diff;
  return out;
}

// c_ab(k) = sum mu(n)/n^b (1-1/n^a)^k, evaluated as 1/zeta(b) minus the
// binomial-corrected complement sum. b <= 1 falls back to a plain
// truncated sum flagged non-rigorous.
inline SeriesResult ck_moebius(std::uint64_t k, const RieszParams& params,
                               const MobiusTable& table, const PrecisionContext& ctx) {
  if (!params.absolutely_convergent()) {
    PrecisionGuard guard(ctx.digits + 15);
    Real a = at_precision(params.a, ctx.digits + 15);
    Real b = at_precision(params.b, ctx.digits + 15);
    Real sum = 0, checkpoint = 0;
    std::uint64_t half = table.n_max / 2;
    for (std::uint64_t n = 1; n <= table.n_max; ++n) {
      int w = table.mu(n);
      if (w == 0) continue;
      Real term = pow(Real(n), -b);
      if (k > 0) term *= pow(1 - pow(Real(n), -a), static_cast<unsigned long>(k));
      sum += (w > 0) ? term : -term;
      if (n == half) checkpoint = sum;
    }
    SeriesResult out;
    out.method = Method::moebius;
    out.rigorous = false;
    out.value = sum;
    out.error_bound = abs(sum - checkpoint) + pow(Real(table.n_max), 1 - params.b);
    out.terms_used = table.n_max;
    return out;
  }
  PrecisionContext inner(ctx.digits, ctx.tol / 2);
  SeriesResult f = mobius_binomial_sum(k, params.a, params.b, table, inner, Method::moebius);
  unsigned P = ctx.digits + 15;
  PrecisionGuard guard(P);
  Real inv_zeta_b = detail::zeta_at(params.b, true, P);
  f.value = inv_zeta_b - f.value;
  f.error_bound += pow10(-static_cast<int>(ctx.digits) - 2);
  return f;
}

// Zero-expansion model: the returned value approximates c_{k-1}
// (the formula is indexed that way; the off-by-one matters).
// Besides the nontrivial zeros, the first trivial zero rho = -2 enters
// through 1/(2 k^2 zeta'(-2)) = -2 pi^2 / (zeta(3) k^2); it is comparable
// to the oscillation near k ~ 1e4 and cannot be dropped there.
inline double ck_asymptotic(std::uint64_t k, const std::vector<ZetaZeroTerm>& zeros) {
  if (k < 2) throw std::domain_error("ck_asymptotic: k must be >= 2");
  if (zeros.empty()) throw std::domain_error("ck_asymptotic: empty zero table");
  double lk = std::log(double(k));
  double acc = 0;
  for (const auto& z : zeros) {
    double phase = z.gamma * lk / 2;
    acc += 2 * (z.A * std::cos(phase) - z.B * std::sin(phase));
  }
  constexpr double zeta3 = 1.2020569031595943;
  double trivial = -2 * 9.869604401089358 / (zeta3 * double(k) * double(k));
  return std::pow(double(k), -0.75) * acc + trivial;
}

struct CkSweepPoint {
  std::uint64_t k;
  SeriesResult result;
};

inline std::vector<CkSweepPoint> ck_sweep(std::uint64_t k_lo, std::uint64_t k_hi,
                                          std::size_t samples, Method method,
                                          const RieszParams& params, const MobiusTable& table,
                                          const PrecisionContext& ctx, bool log_spacing = true) {
  if (k_lo >= k_hi || samples < 2) throw std::domain_error("ck_sweep: need k_lo < k_hi, samples >= 2");
  std::vector<std::uint64_t> ks;
  ks.reserve(samples);
  for (std::size_t i = 0; i < samples; ++i) {
    double t = double(i) / double(samples - 1);
    double kd = log_spacing ? double(k_lo) * std::pow(double(k_hi) / double(k_lo), t)
                            : double(k_lo) + t * double(k_hi - k_lo);
    auto k = static_cast<std::uint64_t>(std::llround(kd));
    if (k < k_lo) k = k_lo;
    if (k > k_hi) k = k_hi;
    if (!ks.empty() && k <= ks.back()) continue;  // dedupe after rounding
    ks.push_back(k);
  }
  std::vector<CkSweepPoint> out;
  out.reserve(ks.size());
  for (auto k : ks) {
    SeriesResult r;
    switch (method) {
      case Method::moebius: r = ck_moebius(k, params, table, ctx); break;
      case Method::forward_diff: r = ck_forward_diff(k, ctx); break;
      case Method::asymptotic: {
        r.method = Method::asymptotic;
        r.value = ck_asymptotic(k + 1, default_zero_table());  // model for c_k
        r.error_bound = 0;
        r.rigorous = false;
        r.terms_used = 1;
        break;
      }
      default: throw std::domain_error("ck_sweep: unsupported method");
    }
    out.push_back({k, std::move(r)});
  }
  return out;
}

}  // namespace rieszsum
