#pragma once

#include "rieszsum/bernoulli.hpp"
#include "rieszsum/precision.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <stdexcept>

namespace rieszsum {

namespace detail {

// Cache of zeta(2m) values keyed by m, each stored with the precision it
// was computed at; re-computed transparently when more digits are needed.
class ZetaEvenCache {
 public:
  static ZetaEvenCache& instance() {
    static ZetaEvenCache c;
    return c;
  }

  template <typename Compute>
  Real get(unsigned m, unsigned digits, Compute&& compute) {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = values_.find(m);
    if (it != values_.end() && it->second.first >= digits) return it->second.second;
    Real v = compute();
    values_[m] = {digits, v};
    return v;
  }

 private:
  std::mutex mu_;
  std::map<unsigned, std::pair<unsigned, Real>> values_;
};

// Exact closed form (2 pi)^{2m} |B_{2m}| / (2 (2m)!).
inline Real zeta_even_bernoulli(unsigned m, unsigned digits) {
  PrecisionGuard guard(digits);
  Rational b = bernoulli(2 * m);
  Int fact(1);
  for (unsigned i = 2; i <= 2 * m; ++i) fact *= i;
  Real two_pi = 2 * const_pi(digits);
  return pow(two_pi, 2 * m) * abs(Real(b)) / (2 * Real(fact));
}

// Plain Dirichlet series 1 + 2^{-s} + 3^{-s} + ...; only used for large
// even s where a handful of terms reach full precision.
inline Real zeta_even_dirichlet(unsigned m, unsigned digits) {
  PrecisionGuard guard(digits);
  unsigned long s = 2ul * m;
  Real eps = pow10(-static_cast<int>(digits) - 2);
  Real sum = 1;
  for (unsigned long n = 2;; ++n) {
    Real term = 1 / pow(Real(n), s);
    if (term < eps) break;
    sum += term;
  }
  return sum;
}

// Cohen--Rodriguez Villegas--Zagier acceleration of the alternating
// series sum_{k>=0} (-1)^k (k+1)^{-s}; error decays like (3+sqrt 8)^{-n}.
inline Real eta_accelerated(const Real& s_in, unsigned digits) {
  PrecisionGuard guard(digits + 10);
  Real s = at_precision(s_in, digits + 10);
  unsigned n = static_cast<unsigned>(1.31 * (digits + 10)) + 5;
  Real d = pow(3 + 2 * sqrt(Real(2)), n);
  d = (d + 1 / d) / 2;
  Real b = -1, c = -d, acc = 0;
  for (unsigned k = 0; k < n; ++k) {
    c = b - c;
    acc += c * pow(Real(k + 1), -s);
    b *= Real(k + n) * (Real(k) - n) / ((k + Real(1) / 2) * (k + 1));
  }
  return acc / d;
}

}  // namespace detail

// Crossover between the exact Bernoulli closed form and the truncated
// Dirichlet series for zeta(2m): threshold on the argument 2m.
inline constexpr unsigned kZetaEvenBernoulliMax = 300;

inline Real zeta_even(unsigned m, const PrecisionContext& ctx) {
  if (m == 0) throw std::domain_error("zeta_even: m must be >= 1");
  unsigned digits = ctx.digits + 10;
  return detail::ZetaEvenCache::instance().get(m, digits, [&] {
    if (2 * m <= kZetaEvenBernoulliMax) return detail::zeta_even_bernoulli(m, digits);
    return detail::zeta_even_dirichlet(m, digits);
  });
}

// Gamma at positive real argument via the Stirling series with argument
// raising: the series error is bounded by its first omitted term once
// the argument is large enough for the target precision.
inline Real gamma_real(const Real& z_in, const PrecisionContext& ctx) {
  if (!(z_in > 0)) throw std::domain_error("gamma_real: argument must be positive");
  unsigned digits = ctx.digits + 10;
  PrecisionGuard guard(digits);
  Real z = at_precision(z_in, digits);
  double target = 0.37 * digits + 6.0;
  unsigned shift = 0;
  if (z < target) shift = static_cast<unsigned>(std::ceil(target - static_cast<double>(z)));
  Real w = z + shift;
  Real acc = (w - Real(1) / 2) * log(w) - w + log(2 * const_pi(digits)) / 2;
  Real eps = pow10(-static_cast<int>(digits) - 2);
  Real w2 = w * w;
  Real wpow = w;  // w^{2n-1}
  Real prev = 0;
  for (unsigned n = 1;; ++n) {
    Real term = Real(bernoulli(2 * n)) / (Real(2 * n) * (2 * n - 1) * wpow);
    Real aterm = abs(term);
    if (n > 1 && aterm > prev) break;  // past the asymptotic optimum
    acc += term;
    if (aterm < eps) break;
    prev = aterm;
    wpow *= w2;
  }
  Real result = exp(acc);
  for (unsigned i = 0; i < shift; ++i) result /= (z + i);
  return result;
}

// zeta at a general real argument: accelerated eta series for s >= 0
// (s = 0 included, since the reflection formula degenerates to
// 0 * infinity there), functional-equation reflection for s < 0.
inline Real zeta_real(const Real& s_in, const PrecisionContext& ctx) {
  if (s_in == 1) throw pole_error("zeta_real: pole at s = 1");
  unsigned digits = ctx.digits + 10;
  PrecisionGuard guard(digits);
  Real s = at_precision(s_in, digits);
  if (s >= 0) {
    Real eta = detail::eta_accelerated(s, digits);
    return eta / (1 - pow(Real(2), 1 - s));
  }
  // zeta(s) = 2^s pi^{s-1} sin(pi s/2) Gamma(1-s) zeta(1-s)
  Real pi = const_pi(digits);
  Real eta = detail::eta_accelerated(1 - s, digits);
  Real zeta_1ms = eta / (1 - pow(Real(2), s));
  return pow(Real(2), s) * pow(pi, s - 1) * sin(pi * s / 2) * gamma_real(1 - s, ctx) * zeta_1ms;
}

// J_ab = integral_0^inf t^{-b} exp(-1/t^a) dt = (1/a) Gamma((b-1)/a).
inline Real j_ab(const Real& a_in, const Real& b_in, const PrecisionContext& ctx) {
  if (!(a_in > 0)) throw std::domain_error("j_ab: a must be positive");
  if (!(b_in > 1)) throw std::domain_error("j_ab: integral diverges for b <= 1");
  PrecisionGuard guard(ctx.digits + 10);
  Real a = at_precision(a_in, ctx.digits + 10);
  Real b = at_precision(b_in, ctx.digits + 10);
  return gamma_real((b - 1) / a, ctx) / a;
}

}  // namespace rieszsum
