/// \file parallel.hpp
/// Deterministic parallel map with pairwise tree reduction. Per-index values
/// are buffered and reduced in a fixed order, so the result is bit-identical
/// for any thread count.
#pragma once

#include <cstdint>
#include <thread>
#include <vector>

namespace bohmlw {

inline int default_threads() {
  const unsigned hc = std::thread::hardware_concurrency();
  return hc == 0 ? 1 : int(hc);
}

template <class Fn>
void parallel_for(std::int64_t n, int threads, Fn&& fn) {
  if (threads <= 1 || n < 2) {
    for (std::int64_t i = 0; i < n; ++i) fn(i);
    return;
  }
  std::vector<std::thread> pool;
  const int nt = int(std::min<std::int64_t>(threads, n));
  pool.reserve(nt);
  for (int t = 0; t < nt; ++t) {
    pool.emplace_back([=]() mutable {
      for (std::int64_t i = t; i < n; i += nt) fn(i);
    });
  }
  for (auto& th : pool) th.join();
}

/// Pairwise (tree) sum of buf[0..n) using `combine(a, b)`; order fixed by the
/// index structure, independent of thread count.
template <class T, class Combine>
T pairwise_reduce(std::vector<T>& buf, Combine&& combine) {
  std::size_t n = buf.size();
  if (n == 0) return T{};
  while (n > 1) {
    const std::size_t half = n / 2;
    for (std::size_t i = 0; i < half; ++i) buf[i] = combine(buf[2 * i], buf[2 * i + 1]);
    if (n % 2 == 1) {
      buf[half] = buf[n - 1];
      n = half + 1;
    } else {
      n = half;
    }
  }
  return buf[0];
}

/// Evaluate fn(i) for i in [0, n) in parallel and reduce pairwise.
template <class T, class Fn, class Combine>
T parallel_map_reduce(std::int64_t n, int threads, Fn&& fn, Combine&& combine) {
  std::vector<T> buf(static_cast<std::size_t>(n));
  parallel_for(n, threads, [&](std::int64_t i) { buf[std::size_t(i)] = fn(i); });
  return pairwise_reduce(buf, combine);
}

}  // namespace bohmlw
