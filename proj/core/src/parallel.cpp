#include "freewidth/parallel.hpp"

#include <algorithm>
#include <cstdlib>

namespace freewidth {

int worker_count() {
  if (const char* env = std::getenv("FREEWIDTH_THREADS")) {
    int v = std::atoi(env);
    if (v >= 1) return v;
  }
  unsigned hc = std::thread::hardware_concurrency();
  if (hc == 0) return 1;
  return std::min<int>(static_cast<int>(hc), 8);
}

void parallel_for(int n, const std::function<void(int)>& body) {
  if (n <= 0) return;
  int workers = std::min(worker_count(), n);
  if (workers <= 1) {
    for (int i = 0; i < n; ++i) body(i);
    return;
  }
  std::atomic<int> next{0};
  std::vector<std::thread> pool;
  pool.reserve(static_cast<std::size_t>(workers));
  for (int w = 0; w < workers; ++w) {
    pool.emplace_back([&]() {
      for (;;) {
        int i = next.fetch_add(1);
        if (i >= n) break;
        body(i);
      }
    });
  }
  for (auto& t : pool) t.join();
}

}  // namespace freewidth
