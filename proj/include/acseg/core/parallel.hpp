#pragma once

#include <functional>
#include <thread>
#include <vector>

namespace acseg {

// Resolve a thread budget: 0 means hardware concurrency.
inline int resolve_threads(int budget) {
  if (budget > 0) return budget;
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

// Run fn(begin, end) over disjoint chunks of [0, n). Outputs written by fn must
// be indexed by the loop variable so results are independent of the budget.
void parallel_chunks(int n, int thread_budget, const std::function<void(int, int)>& fn);

// Per-index convenience wrapper.
void parallel_for(int n, int thread_budget, const std::function<void(int)>& fn);

}  // namespace acseg
