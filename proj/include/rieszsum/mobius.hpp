#pragma once

#include "rieszsum/precision.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstring>
#include <fstream>
#include <string>
#include <vector>

namespace rieszsum {

inline constexpr std::uint64_t kMobiusDefaultCeiling = 100'000'000;  // ~100 MB of table
inline constexpr std::uint64_t kMobiusSegmentThreshold = 10'000'000;
inline constexpr char kMobiusMagic[8] = {'M', 'O', 'B', 'I', 'U', 'S', '0', '1'};

struct MobiusTable {
  std::uint64_t n_max = 0;
  std::vector<std::int8_t> values;  // values[n-1] = mu(n)

  int mu(std::uint64_t n) const {
    if (n == 0 || n > n_max) throw std::out_of_range("MobiusTable::mu: n out of range");
    return values[n - 1];
  }
};

namespace detail {

inline std::vector<std::uint32_t> primes_up_to(std::uint32_t limit) {
  std::vector<bool> composite(limit + 1, false);
  std::vector<std::uint32_t> primes;
  for (std::uint32_t i = 2; i <= limit; ++i) {
    if (composite[i]) continue;
    primes.push_back(i);
    for (std::uint64_t j = std::uint64_t(i) * i; j <= limit; j += i) composite[j] = true;
  }
  return primes;
}

inline void linear_sieve(MobiusTable& t) {
  std::uint64_t n = t.n_max;
  std::vector<bool> composite(n + 1, false);
  std::vector<std::uint32_t> primes;
  t.values.assign(n, 0);
  t.values[0] = 1;
  for (std::uint64_t i = 2; i <= n; ++i) {
    if (!composite[i]) {
      primes.push_back(static_cast<std::uint32_t>(i));
      t.values[i - 1] = -1;
    }
    for (std::uint32_t p : primes) {
      std::uint64_t ip = i * p;
      if (ip > n) break;
      composite[ip] = true;
      if (i % p == 0) {
        t.values[ip - 1] = 0;
        break;
      }
      t.values[ip - 1] = -t.values[i - 1];
    }
  }
}

// Segmented sieve: per segment, divide out each base prime and its
// square, then anything left over is a single large prime factor.
inline void segmented_sieve(MobiusTable& t, std::uint64_t segment_size = 1u << 20) {
  std::uint64_t n = t.n_max;
  std::uint32_t root = static_cast<std::uint32_t>(std::uint64_t(std::sqrt(double(n))) + 1);
  while (std::uint64_t(root) * root > n) --root;
  auto primes = primes_up_to(root);
  t.values.assign(n, 0);
  std::vector<std::int8_t> sign(segment_size);
  std::vector<std::uint64_t> rem(segment_size);
  for (std::uint64_t lo = 1; lo <= n; lo += segment_size) {
    std::uint64_t hi = std::min(n, lo + segment_size - 1);
    std::uint64_t len = hi - lo + 1;
    for (std::uint64_t i = 0; i < len; ++i) {
      sign[i] = 1;
      rem[i] = lo + i;
    }
    for (std::uint32_t p : primes) {
      std::uint64_t p2 = std::uint64_t(p) * p;
      for (std::uint64_t m = ((lo + p2 - 1) / p2) * p2; m <= hi; m += p2) sign[m - lo] = 0;
      for (std::uint64_t m = ((lo + p - 1) / p) * p; m <= hi; m += p) {
        std::uint64_t i = m - lo;
        if (sign[i] == 0) continue;
        sign[i] = -sign[i];
        do rem[i] /= p;
        while (rem[i] % p == 0);  // exponent >= 2 already caught via p^2 pass
      }
    }
    for (std::uint64_t i = 0; i < len; ++i) {
      if (sign[i] == 0) continue;
      t.values[lo + i - 1] = (rem[i] > 1) ? -sign[i] : sign[i];
    }
  }
  t.values[0] = 1;
}

}  // namespace detail

inline MobiusTable sieve(std::uint64_t n_max, bool allow_large = false) {
  if (n_max == 0) throw std::domain_error("sieve: n_max must be >= 1");
  if (n_max > kMobiusDefaultCeiling && !allow_large)
    throw resource_error(
        "sieve: n_max exceeds the default 1e8 memory budget; pass allow_large to opt in",
        n_max);
  MobiusTable t;
  t.n_max = n_max;
  if (n_max > kMobiusSegmentThreshold)
    detail::segmented_sieve(t);
  else
    detail::linear_sieve(t);
  return t;
}

inline void save_cache(const MobiusTable& table, const std::string& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw format_error("save_cache: cannot open " + path);
  out.write(kMobiusMagic, 8);
  std::uint64_t n = table.n_max;
  char len[8];
  for (int i = 0; i < 8; ++i) len[i] = static_cast<char>((n >> (8 * i)) & 0xff);
  out.write(len, 8);
  out.write(reinterpret_cast<const char*>(table.values.data()),
            static_cast<std::streamsize>(table.values.size()));
  if (!out) throw format_error("save_cache: write failed for " + path);
}

inline MobiusTable load_cache(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw format_error("load_cache: cannot open " + path);
  char magic[8];
  in.read(magic, 8);
  if (!in || std::memcmp(magic, kMobiusMagic, 8) != 0)
    throw format_error("load_cache: bad magic in " + path);
  char len[8];
  in.read(len, 8);
  if (!in) throw format_error("load_cache: truncated header in " + path);
  std::uint64_t n = 0;
  for (int i = 0; i < 8; ++i) n |= std::uint64_t(static_cast<unsigned char>(len[i])) << (8 * i);
  if (n == 0) throw format_error("load_cache: zero-length table in " + path);
  MobiusTable t;
  t.n_max = n;
  t.values.resize(n);
  in.read(reinterpret_cast<char*>(t.values.data()), static_cast<std::streamsize>(n));
  if (static_cast<std::uint64_t>(in.gcount()) != n)
    throw format_error("load_cache: truncated data in " + path);
  for (std::uint64_t i = 0; i < n; ++i) {
    auto b = static_cast<unsigned char>(t.values[i]);
    if (b != 0x00 && b != 0x01 && b != 0xff)
      throw format_error("load_cache: invalid byte value in " + path);
  }
  return t;
}

}  // namespace rieszsum
