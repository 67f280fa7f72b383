#pragma once

#include <thread>
#include <vector>

namespace coxfar {

// Runs fn(begin, end) on contiguous chunks of [0, n) across `workers`
// threads. Callers own determinism: results must be merged in chunk order.
template <typename Fn>
void parallel_chunks(int n, int workers, Fn&& fn) {
  if (workers <= 1 || n <= 1) {
    if (n > 0) fn(0, n);
    return;
  }
  int parts = std::min(workers, n);
  std::vector<std::thread> threads;
  int chunk = (n + parts - 1) / parts;
  for (int p = 0; p < parts; ++p) {
    int b = p * chunk;
    int e = std::min(n, b + chunk);
    if (b >= e) break;
    threads.emplace_back([&fn, b, e] { fn(b, e); });
  }
  for (auto& t : threads) t.join();
}

}  // namespace coxfar
