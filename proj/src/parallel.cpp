#include "icx/parallel.hpp"

#include <algorithm>
#include <cstdlib>
#include <thread>
#include <vector>

namespace icx {

unsigned worker_count() {
  if (const char* env = std::getenv("ICX_THREADS")) {
    long v = std::strtol(env, nullptr, 10);
    if (v >= 1) return static_cast<unsigned>(std::min<long>(v, 64));
    return 1;
  }
  unsigned hw = std::thread::hardware_concurrency();
  if (hw == 0) hw = 1;
  return std::min(hw, 8u);
}

void parallel_chunks(std::size_t n,
                     const std::function<void(std::size_t, std::size_t, unsigned)>& fn) {
  unsigned workers = worker_count();
  if (workers <= 1 || n < 2048) {
    fn(0, n, 0);
    return;
  }
  if (workers > n) workers = static_cast<unsigned>(n);
  std::vector<std::thread> threads;
  threads.reserve(workers);
  std::size_t chunk = n / workers;
  std::size_t rem = n % workers;
  std::size_t begin = 0;
  for (unsigned w = 0; w < workers; ++w) {
    std::size_t end = begin + chunk + (w < rem ? 1 : 0);
    threads.emplace_back(fn, begin, end, w);
    begin = end;
  }
  for (auto& t : threads) t.join();
}

}  // namespace icx
