#pragma once

#include "prony/types.hpp"

namespace prony::detail {

/// k (k-1) ... (k-l+1); 1 for l = 0 and 0 for l > k. Exact in double for the
/// small orders used here.
inline double falling_factorial(Index k, Index l) {
  if (l < 0 || l > k) return 0.0;
  double p = 1.0;
  for (Index i = 0; i < l; ++i) p *= static_cast<double>(k - i);
  return p;
}

inline double factorial(Index n) {
  double p = 1.0;
  for (Index i = 2; i <= n; ++i) p *= static_cast<double>(i);
  return p;
}

inline double binomial(Index n, Index k) {
  if (k < 0 || k > n) return 0.0;
  if (k > n - k) k = n - k;
  double p = 1.0;
  for (Index i = 1; i <= k; ++i)
    p *= static_cast<double>(n - k + i) / static_cast<double>(i);
  return p;
}

}  // namespace prony::detail
