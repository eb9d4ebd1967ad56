#pragma once

#include <algorithm>
#include <cstdlib>
#include <thread>
#include <vector>

namespace rhombforge {

/// Worker cap: RHOMBFORGE_THREADS when set, hardware concurrency otherwise.
inline unsigned thread_budget() {
  if (const char* env = std::getenv("RHOMBFORGE_THREADS")) {
    const long v = std::strtol(env, nullptr, 10);
    if (v >= 1) return static_cast<unsigned>(v);
    return 1;
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : hw;
}

/// Runs fn(begin, end) over [0, count) in contiguous chunks. Falls back to a
/// single call for small inputs or a budget of one.
template <typename Fn>
void parallel_chunks(size_t count, size_t grain, Fn&& fn) {
  const unsigned budget = thread_budget();
  if (budget <= 1 || count < 2 * grain) {
    fn(size_t{0}, count);
    return;
  }
  const size_t workers = std::min<size_t>(budget, std::max<size_t>(1, count / grain));
  const size_t chunk = (count + workers - 1) / workers;
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (size_t w = 0; w < workers; ++w) {
    const size_t begin = w * chunk;
    const size_t end = std::min(count, begin + chunk);
    if (begin >= end) break;
    pool.emplace_back([&fn, begin, end] { fn(begin, end); });
  }
  for (auto& t : pool) t.join();
}

}  // namespace rhombforge
