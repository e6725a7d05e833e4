#pragma once

// Shared statistics helpers for the test suites: two-sample KS distance and
// binomial rate comparison.

#include <algorithm>
#include <cmath>
#include <vector>

namespace testutil {

inline double ks_two_sample(std::vector<double> a, std::vector<double> b) {
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  const double na = static_cast<double>(a.size());
  const double nb = static_cast<double>(b.size());
  std::size_t i = 0, j = 0;
  double d = 0.0;
  while (i < a.size() && j < b.size()) {
    if (a[i] <= b[j]) {
      ++i;
    } else {
      ++j;
    }
    d = std::max(d, std::abs(static_cast<double>(i) / na - static_cast<double>(j) / nb));
  }
  return d;
}

/// Critical KS distance at significance alpha=1%: c(alpha) sqrt((n+m)/(nm)).
inline double ks_critical_1pct(std::size_t n, std::size_t m) {
  const double nn = static_cast<double>(n);
  const double mm = static_cast<double>(m);
  return 1.628 * std::sqrt((nn + mm) / (nn * mm));
}

/// |p1-p2| <= 3 sigma under the pooled binomial standard error.
inline bool rates_within_3sigma(long long k1, long long n1, long long k2, long long n2) {
  const double p1 = static_cast<double>(k1) / static_cast<double>(n1);
  const double p2 = static_cast<double>(k2) / static_cast<double>(n2);
  const double pooled = static_cast<double>(k1 + k2) / static_cast<double>(n1 + n2);
  const double se =
      std::sqrt(pooled * (1.0 - pooled) * (1.0 / static_cast<double>(n1) + 1.0 / static_cast<double>(n2)));
  return std::abs(p1 - p2) <= 3.0 * se + 1e-12;
}

}  // namespace testutil
