/* Copyright 2026 The insdel-codes Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef INSDEL_PARALLEL_HPP
#define INSDEL_PARALLEL_HPP

#include <atomic>
#include <cstdint>
#include <thread>
#include <vector>

namespace insdel {

inline unsigned resolve_threads(unsigned requested) {
  if (requested > 0) return requested;
  unsigned hc = std::thread::hardware_concurrency();
  return hc > 0 ? hc : 1;
}

/// Runs fn(chunk_index, lo, hi) over a partition of [begin, end) given by
/// `bounds` (bounds.size() == chunks + 1) and returns the per-chunk results
/// in chunk order. Results are combined by the caller in a fixed order, so
/// the outcome never depends on scheduling.
template <typename Partial, typename Fn>
std::vector<Partial> run_partitioned(const std::vector<std::uint64_t>& bounds,
                                     unsigned threads, Fn&& fn) {
  const std::size_t chunks = bounds.empty() ? 0 : bounds.size() - 1;
  std::vector<Partial> partials(chunks);
  if (chunks == 0) return partials;
  if (threads <= 1 || chunks == 1) {
    for (std::size_t c = 0; c < chunks; ++c)
      partials[c] = fn(c, bounds[c], bounds[c + 1]);
    return partials;
  }
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (;;) {
      std::size_t c = next.fetch_add(1);
      if (c >= chunks) return;
      partials[c] = fn(c, bounds[c], bounds[c + 1]);
    }
  };
  std::vector<std::thread> pool;
  const unsigned spawn = threads - 1;
  pool.reserve(spawn);
  for (unsigned t = 0; t < spawn; ++t) pool.emplace_back(worker);
  worker();
  for (auto& th : pool) th.join();
  return partials;
}

/// Uniform chunk boundaries over [begin, end).
inline std::vector<std::uint64_t> uniform_bounds(std::uint64_t begin,
                                                 std::uint64_t end,
                                                 std::uint64_t chunks) {
  if (end <= begin) return {begin, begin};
  const std::uint64_t span = end - begin;
  if (chunks > span) chunks = span;
  std::vector<std::uint64_t> b(chunks + 1);
  for (std::uint64_t c = 0; c <= chunks; ++c) b[c] = begin + span * c / chunks;
  return b;
}

/// Cooperative early stop for ordered scans. A chunk that settles the global
/// answer signals its index; chunks strictly after the earliest signal may
/// abandon their scan (their result could only be displaced by it), while
/// earlier chunks keep going, which keeps the combined result deterministic.
class OrderedStop {
 public:
  void signal(std::uint64_t chunk) {
    std::uint64_t cur = first_.load(std::memory_order_relaxed);
    while (chunk < cur &&
           !first_.compare_exchange_weak(cur, chunk, std::memory_order_relaxed)) {
    }
  }
  bool may_abandon(std::uint64_t chunk) const {
    return first_.load(std::memory_order_relaxed) < chunk;
  }

 private:
  std::atomic<std::uint64_t> first_{~std::uint64_t{0}};
};

}  // namespace insdel

#endif  // INSDEL_PARALLEL_HPP
