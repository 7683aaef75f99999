#include "aluthge/parallel.hpp"

#include <atomic>
#include <cstdlib>
#include <thread>
#include <vector>

namespace aluthge {

int thread_budget() {
  const char* env = std::getenv("ALUTHGE_LAB_THREADS");
  if (!env) return 1;
  const int parsed = std::atoi(env);
  return parsed > 1 ? parsed : 1;
}

void parallel_for(std::int64_t n, const std::function<void(std::int64_t)>& fn) {
  const int budget = thread_budget();
  if (budget <= 1 || n < 2) {
    for (std::int64_t i = 0; i < n; ++i) fn(i);
    return;
  }
  const int workers = static_cast<int>(std::min<std::int64_t>(budget, n));
  std::atomic<std::int64_t> next{0};
  std::vector<std::thread> pool;
  pool.reserve(static_cast<size_t>(workers));
  for (int w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (std::int64_t i = next.fetch_add(1); i < n; i = next.fetch_add(1)) fn(i);
    });
  }
  for (std::thread& t : pool) t.join();
}

} // namespace aluthge
