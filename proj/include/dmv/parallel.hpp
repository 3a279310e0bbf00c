#pragma once

// Deterministic chunked parallelism.  Work is split into fixed-size chunks
// that do not depend on the thread count; per-chunk results are combined in
// chunk order by pairwise summation, so results are bit-identical for any
// number of workers.  THREADS in the environment overrides the worker count.

#include <cstddef>
#include <functional>
#include <vector>

namespace dmv {

int worker_count();

// Calls fn(i) for i in [0, n); each i runs exactly once on some worker.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn);

template <class T>
T pairwise_sum(std::vector<T>& v) {
  if (v.empty()) return T(0);
  for (std::size_t stride = 1; stride < v.size(); stride *= 2)
    for (std::size_t i = 0; i + stride < v.size(); i += 2 * stride) v[i] += v[i + stride];
  return v[0];
}

// Sum of f(i) over [0, n) in chunks of `chunk`.
template <class T, class F>
T chunked_sum(std::size_t n, std::size_t chunk, F&& f) {
  const std::size_t nchunks = (n + chunk - 1) / chunk;
  std::vector<T> partial(nchunks, T(0));
  parallel_for(nchunks, [&](std::size_t c) {
    const std::size_t lo = c * chunk, hi = std::min(n, lo + chunk);
    std::vector<T> local;
    local.reserve(hi - lo);
    for (std::size_t i = lo; i < hi; ++i) local.push_back(f(i));
    partial[c] = pairwise_sum(local);
  });
  return pairwise_sum(partial);
}

}  // namespace dmv
