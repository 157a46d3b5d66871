#pragma once

#include <algorithm>
#include <cstddef>
#include <future>
#include <thread>
#include <vector>

namespace bqinv {

// 0 means "use the available hardware parallelism".
inline unsigned resolve_workers(unsigned requested) {
  if (requested != 0) return requested;
  return std::max(1u, std::thread::hardware_concurrency());
}

// Splits [0, count) into at most `workers` contiguous chunks and runs
// fn(begin, end) on each. Results come back in chunk order, so callers that
// concatenate them get the same output for any worker count.
template <class Fn>
auto parallel_chunks(std::size_t count, unsigned workers, Fn fn)
    -> std::vector<decltype(fn(std::size_t{}, std::size_t{}))> {
  using Result = decltype(fn(std::size_t{}, std::size_t{}));
  const std::size_t chunks =
      std::max<std::size_t>(1, std::min<std::size_t>(resolve_workers(workers), count));
  std::vector<Result> out;
  out.reserve(chunks);
  if (chunks == 1) {
    out.push_back(fn(std::size_t{0}, count));
    return out;
  }
  std::vector<std::future<Result>> pending;
  pending.reserve(chunks);
  for (std::size_t i = 0; i < chunks; ++i) {
    const std::size_t begin = count * i / chunks;
    const std::size_t end = count * (i + 1) / chunks;
    pending.push_back(std::async(std::launch::async, fn, begin, end));
  }
  for (auto& f : pending) out.push_back(f.get());
  return out;
}

}  // namespace bqinv
