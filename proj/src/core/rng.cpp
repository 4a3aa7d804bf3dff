#include "acseg/core/rng.hpp"

#include <algorithm>
#include <numeric>

namespace acseg {

std::vector<int> Rng::sample_indices(int n, int k) {
  if (k >= n) {
    std::vector<int> all(n);
    std::iota(all.begin(), all.end(), 0);
    return all;
  }
  std::vector<int> pool(n);
  std::iota(pool.begin(), pool.end(), 0);
  // Partial Fisher-Yates: fix the first k slots.
  for (int i = 0; i < k; ++i) {
    const int j = i + static_cast<int>(next_below(n - i));
    std::swap(pool[i], pool[j]);
  }
  pool.resize(k);
  std::sort(pool.begin(), pool.end());
  return pool;
}

}  // namespace acseg
