#pragma once

#include <functional>
#include <thread>
#include <vector>

namespace psalg {

// Runs fn(i) for i in [0, n) over `threads` workers and returns the results
// in index order, so reports assemble deterministically regardless of the
// thread count. All inputs are immutable; fn must be pure.
template <class R, class F>
std::vector<R> parallel_map(size_t n, int threads, F&& fn) {
  std::vector<R> out(n);
  if (threads <= 1 || n <= 1) {
    for (size_t i = 0; i < n; ++i) out[i] = fn(i);
    return out;
  }
  size_t nw = std::min<size_t>(threads, n);
  std::vector<std::thread> workers;
  workers.reserve(nw);
  for (size_t w = 0; w < nw; ++w)
    workers.emplace_back([&, w] {
      for (size_t i = w; i < n; i += nw) out[i] = fn(i);
    });
  for (auto& t : workers) t.join();
  return out;
}

}  // namespace psalg
