#pragma once

#include "rieszsum/precision.hpp"

#include <mutex>
#include <vector>

namespace rieszsum {

// Exact rational Bernoulli numbers B_0, B_1, B_2, ... (B_1 = -1/2),
// grown on demand via the recurrence sum_{j=0}^{m} C(m+1,j) B_j = 0.
// The cache only ever grows and rows are immutable once written.
class BernoulliCache {
 public:
  static const Rational& get(unsigned n) {
    static BernoulliCache cache;
    std::lock_guard<std::mutex> lock(cache.mu_);
    cache.extend(n);
    return cache.values_[n];
  }

 private:
  BernoulliCache() { values_ = {Rational(1), Rational(-1, 2)}; }

  void extend(unsigned n) {
    while (values_.size() <= n) {
      unsigned m = static_cast<unsigned>(values_.size());
      if (m % 2 == 1) {
        values_.emplace_back(0);
        continue;
      }
      // B_m = -1/(m+1) * sum_{j=0}^{m-1} C(m+1, j) B_j
      Rational sum(0);
      Int binom(1);  // C(m+1, j), j = 0
      for (unsigned j = 0; j < m; ++j) {
        if (values_[j] != 0) sum += Rational(binom) * values_[j];
        binom = binom * (m + 1 - j) / (j + 1);
      }
      values_.push_back(-sum / (m + 1));
    }
  }

  std::mutex mu_;
  std::vector<Rational> values_;
};

inline Rational bernoulli(unsigned n) { return BernoulliCache::get(n); }

}  // namespace rieszsum
