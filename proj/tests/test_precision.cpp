#include "rieszsum/precision.hpp"

#include <catch_amalgamated.hpp>

using namespace rieszsum;

TEST_CASE("PrecisionContext enforces its invariants") {
  CHECK_THROWS_AS(PrecisionContext(20, Real("1e-5")), std::invalid_argument);
  CHECK_THROWS_AS(PrecisionContext(50, Real(0)), std::invalid_argument);
  CHECK_THROWS_AS(PrecisionContext(50, Real(-1)), std::invalid_argument);
  // tol below 10^{-digits+10} is unachievable
  CHECK_THROWS_AS(PrecisionContext(30, Real("1e-25")), std::invalid_argument);
  CHECK_NOTHROW(PrecisionContext(30, Real("1e-20")));
  auto ctx = PrecisionContext::make(50, -30);
  CHECK(ctx.digits == 50);
  CHECK(ctx.tol == pow10(-30));
}

TEST_CASE("PrecisionGuard restores the previous default") {
  unsigned before = Real::default_precision();
  {
    PrecisionGuard guard(before + 37);
    CHECK(Real::default_precision() == before + 37);
  }
  CHECK(Real::default_precision() == before);
}

TEST_CASE("at_precision raises but never lowers") {
  PrecisionGuard guard(60);
  Real v = 1;
  v.precision(20);
  CHECK(at_precision(v, 50).precision() >= 50);
  v.precision(80);
  CHECK(at_precision(v, 50).precision() == 80);
}

TEST_CASE("const_pi delivers the requested digits") {
  PrecisionGuard guard(60);
  Real pi = const_pi(60);
  // first 50 digits of pi
  Real ref("3.14159265358979323846264338327950288419716939937511");
  CHECK(abs(pi - ref) < pow10(-49));
}

TEST_CASE("method names are stable (CSV/cache contract)") {
  CHECK(std::string(method_name(Method::naive)) == "naive");
  CHECK(std::string(method_name(Method::kummer)) == "kummer");
  CHECK(std::string(method_name(Method::moebius)) == "moebius");
  CHECK(std::string(method_name(Method::forward_diff)) == "diff");
  CHECK(std::string(method_name(Method::asymptotic)) == "asymptotic");
}
