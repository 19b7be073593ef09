#pragma once

#include <cstdint>
#include <thread>
#include <vector>

namespace boxkit {

// Splits [0, count) into contiguous chunks, runs `chunk(begin, end)` on each,
// and folds the per-chunk results in chunk order. Results are independent of
// the thread count as long as `merge` is associative over adjacent ranges.
template <class Result, class ChunkFn, class MergeFn>
Result parallel_reduce(std::uint64_t count, unsigned threads, Result init,
                       ChunkFn chunk, MergeFn merge) {
  if (threads == 0) threads = std::thread::hardware_concurrency();
  if (threads <= 1 || count < 2 * threads) {
    if (count == 0) return init;
    Result r = chunk(std::uint64_t{0}, count);
    return merge(std::move(init), std::move(r));
  }
  const std::uint64_t per = count / threads;
  std::vector<Result> partial(threads, init);
  std::vector<std::thread> workers;
  workers.reserve(threads);
  for (unsigned t = 0; t < threads; ++t) {
    const std::uint64_t begin = t * per;
    const std::uint64_t end = (t + 1 == threads) ? count : begin + per;
    workers.emplace_back([&, t, begin, end] { partial[t] = chunk(begin, end); });
  }
  for (auto& w : workers) w.join();
  Result out = std::move(init);
  for (auto& p : partial) out = merge(std::move(out), std::move(p));
  return out;
}

}  // namespace boxkit
