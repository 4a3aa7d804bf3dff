#include "acseg/core/parallel.hpp"

#include <algorithm>
#include <exception>

namespace acseg {

void parallel_chunks(int n, int thread_budget, const std::function<void(int, int)>& fn) {
  if (n <= 0) return;
  const int threads = std::min(resolve_threads(thread_budget), n);
  if (threads <= 1) {
    fn(0, n);
    return;
  }
  std::vector<std::thread> pool;
  std::vector<std::exception_ptr> errors(threads);
  const int chunk = (n + threads - 1) / threads;
  for (int t = 0; t < threads; ++t) {
    const int begin = t * chunk;
    const int end = std::min(n, begin + chunk);
    if (begin >= end) break;
    pool.emplace_back([&fn, &errors, t, begin, end] {
      try {
        fn(begin, end);
      } catch (...) {
        errors[t] = std::current_exception();
      }
    });
  }
  for (auto& th : pool) th.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
}

void parallel_for(int n, int thread_budget, const std::function<void(int)>& fn) {
  parallel_chunks(n, thread_budget, [&fn](int begin, int end) {
    for (int i = begin; i < end; ++i) fn(i);
  });
}

}  // namespace acseg
