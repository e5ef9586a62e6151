#pragma once

#include <algorithm>
#include <cstdint>
#include <exception>
#include <thread>
#include <vector>

namespace motint {

/// Splits [0, total) into contiguous chunks, runs `work(begin, end)` on worker
/// threads and folds the per-chunk results in chunk order with `combine`.
/// The first exception thrown by any chunk is rethrown.
template <class Result, class Work, class Combine>
Result parallel_reduce(std::uint64_t total, Result init, Work work, Combine combine) {
  unsigned threads = std::max(1u, std::thread::hardware_concurrency());
  if (total < 4096) threads = 1;
  const std::uint64_t chunks = std::min<std::uint64_t>(total == 0 ? 1 : total, threads * 4ull);
  std::vector<Result> partial(chunks, init);
  std::vector<std::exception_ptr> errors(chunks);
  auto run_chunk = [&](std::uint64_t c) {
    const std::uint64_t begin = total * c / chunks;
    const std::uint64_t end = total * (c + 1) / chunks;
    try {
      partial[c] = work(begin, end);
    } catch (...) {
      errors[c] = std::current_exception();
    }
  };
  if (threads == 1) {
    for (std::uint64_t c = 0; c < chunks; ++c) run_chunk(c);
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t)
      pool.emplace_back([&, t] {
        for (std::uint64_t c = t; c < chunks; c += threads) run_chunk(c);
      });
    for (auto& th : pool) th.join();
  }
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
  Result acc = init;
  for (auto& r : partial) acc = combine(std::move(acc), std::move(r));
  return acc;
}

}  // namespace motint
