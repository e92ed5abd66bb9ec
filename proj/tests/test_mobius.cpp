#include "rieszsum/mobius.hpp"

#include <catch_amalgamated.hpp>

#include <cstdio>
#include <fstream>
#include <vector>

using namespace rieszsum;

namespace {

// trial-factorization oracle, independent of the sieves
int mu_oracle(std::uint64_t n) {
  int factors = 0;
  for (std::uint64_t p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      n /= p;
      if (n % p == 0) return 0;
      ++factors;
    }
  }
  if (n > 1) ++factors;
  return factors % 2 ? -1 : 1;
}

std::string read_all(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

}  // namespace

TEST_CASE("linear sieve agrees with trial factorization") {
  auto t = sieve(3000);
  for (std::uint64_t n = 1; n <= 3000; ++n) CHECK(t.mu(n) == mu_oracle(n));
  CHECK_THROWS_AS(t.mu(0), std::out_of_range);
  CHECK_THROWS_AS(t.mu(3001), std::out_of_range);
}

TEST_CASE("segmented sieve agrees with the linear sieve") {
  MobiusTable a{200000, {}};
  detail::linear_sieve(a);
  MobiusTable b{200000, {}};
  detail::segmented_sieve(b, 1 << 12);  // small segments exercise the boundaries
  CHECK(a.values == b.values);
}

TEST_CASE("divisor-sum identity: sum_{d|n} mu(d) = [n == 1]") {
  auto t = sieve(10000);
  std::vector<long> s(10001, 0);
  for (std::uint64_t d = 1; d <= 10000; ++d)
    for (std::uint64_t m = d; m <= 10000; m += d) s[m] += t.mu(d);
  CHECK(s[1] == 1);
  for (std::uint64_t n = 2; n <= 10000; ++n) {
    INFO("n = " << n);
    REQUIRE(s[n] == 0);
  }
}

TEST_CASE("multiplicativity on coprime pairs") {
  auto t = sieve(100000);
  std::pair<std::uint64_t, std::uint64_t> pairs[] = {
      {3, 5}, {4, 9}, {7, 10}, {12, 35}, {101, 97}, {210, 121}, {221, 35}};
  for (auto [m, n] : pairs) CHECK(t.mu(m * n) == t.mu(m) * t.mu(n));
}

TEST_CASE("Mertens function reference values") {
  auto t = sieve(100000);
  long m = 0;
  std::uint64_t n = 1;
  auto mertens_to = [&](std::uint64_t hi) {
    for (; n <= hi; ++n) m += t.mu(n);
    return m;
  };
  CHECK(mertens_to(10) == -1);
  CHECK(mertens_to(100) == 1);
  CHECK(mertens_to(1000) == 2);
  CHECK(mertens_to(10000) == -23);
  CHECK(mertens_to(100000) == -48);
}

TEST_CASE("partial sums of mu(n)/n^2 approach 6/pi^2") {
  auto t = sieve(100000);
  PrecisionGuard guard(40);
  Real target = 6 / (const_pi(40) * const_pi(40));
  Real sum = 0;
  std::uint64_t next = 1000;
  for (std::uint64_t n = 1; n <= 100000; ++n) {
    sum += Real(t.mu(n)) / (Real(n) * Real(n));
    if (n == next) {
      CHECK(abs(sum - target) <= Real(1) / static_cast<long>(n));
      next *= 10;
    }
  }
}

TEST_CASE("cache round-trips bit-exactly") {
  auto t = sieve(12345);
  std::string path = "mobius_test_cache.bin";
  save_cache(t, path);
  auto u = load_cache(path);
  CHECK(u.n_max == t.n_max);
  CHECK(u.values == t.values);
  // byte-identical on re-save
  std::string first = read_all(path);
  save_cache(u, path);
  CHECK(read_all(path) == first);
  std::remove(path.c_str());
}

TEST_CASE("cache loader rejects malformed files") {
  std::string path = "mobius_bad_cache.bin";
  auto write = [&](const std::string& bytes) {
    std::ofstream out(path, std::ios::binary);
    out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
  };

  write("NOTMAGIC\x05\x00\x00\x00\x00\x00\x00\x00");
  CHECK_THROWS_AS(load_cache(path), format_error);

  // valid magic, truncated data
  std::string good = "MOBIUS01";
  good += std::string("\x05\x00\x00\x00\x00\x00\x00\x00", 8);
  good += std::string("\x01\x01", 2);
  write(good);
  CHECK_THROWS_AS(load_cache(path), format_error);

  // invalid byte value
  good = "MOBIUS01" + std::string("\x02\x00\x00\x00\x00\x00\x00\x00", 8) + std::string("\x01\x07", 2);
  write(good);
  CHECK_THROWS_AS(load_cache(path), format_error);

  CHECK_THROWS_AS(load_cache("no_such_file.bin"), format_error);
  std::remove(path.c_str());
}

TEST_CASE("sieve refuses to blow the memory budget silently") {
  CHECK_THROWS_AS(sieve(kMobiusDefaultCeiling + 1), resource_error);
  try {
    sieve(kMobiusDefaultCeiling + 1);
  } catch (const resource_error& e) {
    CHECK(e.needed_n == kMobiusDefaultCeiling + 1);
  }
}
