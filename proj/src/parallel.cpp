#include "liecomb/parallel.hpp"

#include <atomic>
#include <cstdlib>
#include <exception>
#include <thread>
#include <vector>

namespace liecomb {

int worker_count() {
  if (const char* env = std::getenv("LIECOMB_THREADS")) {
    const int n = std::atoi(env);
    if (n >= 1) return n;
  }
  const unsigned hc = std::thread::hardware_concurrency();
  return hc ? static_cast<int>(hc) : 1;
}

void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn) {
  const int workers = worker_count();
  if (workers <= 1 || n <= 1) {
    for (std::size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::atomic<bool> failed{false};
  std::vector<std::thread> pool;
  const std::size_t chunk = std::max<std::size_t>(1, n / (static_cast<std::size_t>(workers) * 8));
  for (int w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      try {
        while (!failed.load(std::memory_order_relaxed)) {
          const std::size_t begin = next.fetch_add(chunk);
          if (begin >= n) break;
          const std::size_t end = std::min(n, begin + chunk);
          for (std::size_t i = begin; i < end; ++i) fn(i);
        }
      } catch (...) {
        if (!failed.exchange(true)) error = std::current_exception();
      }
    });
  }
  for (auto& t : pool) t.join();
  if (error) std::rethrow_exception(error);
}

}  // namespace liecomb
