#pragma once

#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/mpfr.hpp>

#include <cstddef>
#include <stdexcept>
#include <string>

namespace rieszsum {

// Variable-precision real. Operation results take the thread-default
// precision current at the time they are produced; every public entry
// point installs a PrecisionGuard before computing.
using Real = boost::multiprecision::number<boost::multiprecision::mpfr_float_backend<0>,
                                           boost::multiprecision::et_off>;
using Int = boost::multiprecision::mpz_int;
using Rational = boost::multiprecision::mpq_rational;

class pole_error : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class bracket_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class format_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Thrown when a sieve table (or memory budget) is too small for the
// requested evaluation; needed_n reports the size that would suffice.
class resource_error : public std::runtime_error {
 public:
  resource_error(const std::string& msg, std::size_t needed_n = 0)
      : std::runtime_error(msg), needed_n(needed_n) {}
  std::size_t needed_n;
};

// Thrown when a method is asked for more than its precision budget can
// deliver; the message names the method to use instead.
class precision_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct PrecisionContext {
  unsigned digits;
  Real tol;

  PrecisionContext(unsigned digits_, const Real& tol_) : digits(digits_), tol(tol_) {
    if (digits < 30) throw std::invalid_argument("PrecisionContext: digits must be >= 30");
    if (!(tol > 0)) throw std::invalid_argument("PrecisionContext: tol must be positive");
    Real floor = pow(Real(10), -static_cast<int>(digits) + 10);
    if (tol < floor)
      throw std::invalid_argument("PrecisionContext: tol not achievable at this precision");
  }

  static PrecisionContext make(unsigned digits_, int tol_exp10) {
    return PrecisionContext(digits_, pow(Real(10), tol_exp10));
  }
};

class PrecisionGuard {
 public:
  explicit PrecisionGuard(unsigned digits) : saved_(Real::default_precision()) {
    Real::default_precision(digits);
  }
  ~PrecisionGuard() { Real::default_precision(saved_); }
  PrecisionGuard(const PrecisionGuard&) = delete;
  PrecisionGuard& operator=(const PrecisionGuard&) = delete;

 private:
  unsigned saved_;
};

// Operation results inherit the larger operand precision, so every
// entry point re-rounds its Real inputs up to the working precision
// before computing with them.
inline Real at_precision(Real v, unsigned digits) {
  if (v.precision() < digits) v.precision(digits);
  return v;
}

inline Real const_pi(unsigned digits) {
  Real r;
  r.precision(digits);
  mpfr_const_pi(r.backend().data(), MPFR_RNDN);
  return r;
}

inline Real pow10(int e) { return pow(Real(10), e); }

enum class Method { naive, kummer, moebius, forward_diff, asymptotic, direct, abel };

inline const char* method_name(Method m) {
  switch (m) {
    case Method::naive: return "naive";
    case Method::kummer: return "kummer";
    case Method::moebius: return "moebius";
    case Method::forward_diff: return "diff";
    case Method::asymptotic: return "asymptotic";
    case Method::direct: return "direct";
    case Method::abel: return "abel";
  }
  return "?";
}

struct SeriesResult {
  Real value;
  Real error_bound;     // absolute bound on |true - value|
  std::size_t terms_used = 0;
  Method method = Method::direct;
  bool rigorous = true;  // false for conditionally convergent b <= 1 cases
};

}  // namespace rieszsum
