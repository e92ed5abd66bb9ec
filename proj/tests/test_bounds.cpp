#include "rieszsum/bounds.hpp"

#include <catch_amalgamated.hpp>

#include <random>

using namespace rieszsum;

namespace {
const PrecisionContext ctx = PrecisionContext::make(30, -12);

const MobiusTable& table() {
  static MobiusTable t = sieve(1'000'000);
  return t;
}
}  // namespace

TEST_CASE("BoundReport accounting") {
  BoundReport rep;
  rep.record(Real(1), Real(2));
  rep.record(Real(3), Real(4));
  rep.finalize();
  CHECK(rep.passed);
  CHECK(rep.samples_checked == 2);
  CHECK(rep.max_ratio == Catch::Approx(0.75));

  BoundReport bad;
  bad.record(Real(5), Real(4));
  bad.finalize();
  CHECK_FALSE(bad.passed);

  // nonpositive right side with a positive left side can never pass
  BoundReport degenerate;
  degenerate.record(Real(1), Real(0));
  degenerate.finalize();
  CHECK_FALSE(degenerate.passed);
}

TEST_CASE("geometric grid shape") {
  auto g = geometric_grid(1, 100, 10);
  REQUIRE(g.size() >= 21);
  CHECK(g.front() == Catch::Approx(1.0));
  CHECK(g.back() == Catch::Approx(100.0));
  for (std::size_t i = 1; i < g.size(); ++i) CHECK(g[i] > g[i - 1]);
}

TEST_CASE("power-law fit recovers synthetic data exactly") {
  std::vector<std::pair<double, double>> data;
  for (double x = 10; x < 1e6; x *= 1.7) data.emplace_back(x, 2.0 * std::pow(x, -1.5));
  auto fit = fit_power_law(data);
  CHECK(fit.exponent == Catch::Approx(-1.5).margin(1e-10));
  CHECK(fit.prefactor == Catch::Approx(2.0).margin(1e-9));
  CHECK_THROWS_AS(fit_power_law({{1, 1}, {2, 2}}), std::runtime_error);
}

TEST_CASE("power-law fit is robust to multiplicative noise") {
  std::mt19937 rng(12345);
  std::uniform_real_distribution<double> jitter(0.8, 1.25);
  std::vector<std::pair<double, double>> data;
  for (double x = 10; x < 1e6; x *= 1.3) data.emplace_back(x, 0.5 * std::pow(x, -0.75) * jitter(rng));
  auto fit = fit_power_law(data);
  CHECK(fit.exponent == Catch::Approx(-0.75).margin(0.05));
}

TEST_CASE("corollary 1 holds on a spot grid and validates inputs") {
  std::vector<Real> xs;
  for (double x : geometric_grid(0.01, 1e4, 5)) xs.emplace_back(x);
  auto rep = check_corollary1(Real(2), Real(2), xs, ctx);
  CHECK(rep.passed);
  CHECK(rep.samples_checked == xs.size());
  CHECK_THROWS_AS(check_corollary1(Real(2), Real(1), xs, ctx), std::domain_error);
  CHECK_THROWS_AS(check_corollary1(Real(0), Real(2), xs, ctx), std::domain_error);
  std::vector<Real> bad{Real(-1)};
  CHECK_THROWS_AS(check_corollary1(Real(2), Real(2), bad, ctx), std::domain_error);
}

TEST_CASE("corollary 2 holds on a spot grid") {
  std::vector<Real> xs;
  for (double x : geometric_grid(0.1, 1e4, 4)) xs.emplace_back(x);
  auto rep = check_corollary2(xs, table(), ctx);
  CHECK(rep.passed);
}

TEST_CASE("lemma 3 explicit bound holds from k = 1") {
  std::vector<std::uint64_t> ks{1, 2, 3, 5, 8, 13, 16, 17, 50, 200};
  auto rep = check_lemma3_explicit(ks, table(), ctx);
  CHECK(rep.passed);
  auto rep2 = check_lemma3(ks, table(), ctx);
  CHECK(rep2.passed);
  CHECK_THROWS_AS(check_lemma3({0}, table(), ctx), std::domain_error);
}

TEST_CASE("lemma 4 difference quotient bound") {
  std::vector<std::pair<Real, Real>> pairs;
  for (double x : geometric_grid(1, 1e4, 4)) {
    pairs.emplace_back(Real(x), Real(2 * x));
    pairs.emplace_back(Real(x), Real(x + 1));
  }
  pairs.emplace_back(Real(7), Real(7));  // degenerate pair counts as checked
  auto rep = check_lemma4(pairs, table(), ctx);
  CHECK(rep.passed);
  CHECK(rep.samples_checked == pairs.size());
  std::vector<std::pair<Real, Real>> bad{{Real(5), Real(4)}};
  CHECK_THROWS_AS(check_lemma4(bad, table(), ctx), std::domain_error);
}

TEST_CASE("difference-exponent fit input validation") {
  CHECK_THROWS_AS(fit_difference_exponent(10, 1000, 10, table(), ctx), std::domain_error);
}

TEST_CASE("theorem-1 witness produces comparable normalized sups") {
  auto rep = theorem1_witness(-0.75, 5000, table(), ctx);
  CHECK(rep.samples > 10);
  CHECK(rep.sup_ck_normalized > 0);
  CHECK(rep.sup_rk_normalized > 0);
  // the two sides of the equivalence track each other at delta = -3/4
  CHECK(rep.ratio > 0.2);
  CHECK(rep.ratio < 5.0);
  CHECK_THROWS_AS(theorem1_witness(-1.6, 5000, table(), ctx), std::domain_error);
}
