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

// Test-only oracles, kept independent of the library's DP/search code paths.

#ifndef INSDEL_TESTS_ORACLES_HPP
#define INSDEL_TESTS_ORACLES_HPP

#include <algorithm>
#include <cstdint>
#include <deque>
#include <random>
#include <span>
#include <vector>

#include "insdel/lincode.hpp"

namespace oracle {

// LCS by enumerating all subsequences of `a` and testing containment in `b`.
// Exponential in |a|; fine for |a| <= 12.
inline std::size_t lcs_naive(std::span<const std::uint32_t> a,
                             std::span<const std::uint32_t> b) {
  std::size_t best = 0;
  for (std::uint32_t mask = 0; mask < (1u << a.size()); ++mask) {
    std::size_t bi = 0, len = 0;
    bool ok = true;
    for (std::size_t i = 0; i < a.size() && ok; ++i) {
      if (!(mask >> i & 1)) continue;
      while (bi < b.size() && b[bi] != a[i]) ++bi;
      if (bi == b.size()) {
        ok = false;
        break;
      }
      ++bi;
      ++len;
    }
    if (ok) best = std::max(best, len);
  }
  return best;
}

// Breadth-first search over single-symbol insertions and deletions, inside
// the universe of sequences with length <= maxlen over {0..alphabet-1}.
//
// The bounded universe is exact for pairs with |a|, |b| <= maxlen: in any
// shortest script an inserted symbol is never deleted again (dropping both
// events gives a shorter script), so the script can be reordered to run all
// deletions first; intermediate lengths then never exceed max(|a|, |b|).
class EditBfs {
 public:
  EditBfs(std::uint32_t alphabet, std::size_t maxlen)
      : s_(alphabet), maxlen_(maxlen) {
    offsets_.resize(maxlen_ + 2, 0);
    std::size_t pw = 1;
    for (std::size_t l = 0; l <= maxlen_; ++l) {
      offsets_[l + 1] = offsets_[l] + pw;
      pw *= s_;
    }
  }

  std::size_t universe_size() const { return offsets_[maxlen_ + 1]; }

  std::size_t index_of(std::span<const std::uint32_t> seq) const {
    std::size_t v = 0;
    for (auto x : seq) v = v * s_ + x;
    return offsets_[seq.size()] + v;
  }

  std::vector<std::uint32_t> seq_of(std::size_t idx) const {
    std::size_t l = 0;
    while (idx >= offsets_[l + 1]) ++l;
    std::size_t v = idx - offsets_[l];
    std::vector<std::uint32_t> seq(l);
    for (std::size_t i = l; i-- > 0;) {
      seq[i] = static_cast<std::uint32_t>(v % s_);
      v /= s_;
    }
    return seq;
  }

  // distances from `src` to every sequence in the universe
  std::vector<int> distances_from(std::span<const std::uint32_t> src) const {
    std::vector<int> dist(universe_size(), -1);
    std::deque<std::size_t> queue;
    dist[index_of(src)] = 0;
    queue.push_back(index_of(src));
    std::vector<std::uint32_t> cur, next;
    while (!queue.empty()) {
      const std::size_t at = queue.front();
      queue.pop_front();
      cur = seq_of(at);
      const int d = dist[at];
      // deletions
      for (std::size_t i = 0; i < cur.size(); ++i) {
        next = cur;
        next.erase(next.begin() + static_cast<std::ptrdiff_t>(i));
        const std::size_t to = index_of(next);
        if (dist[to] < 0) {
          dist[to] = d + 1;
          queue.push_back(to);
        }
      }
      // insertions
      if (cur.size() < maxlen_) {
        for (std::size_t i = 0; i <= cur.size(); ++i) {
          for (std::uint32_t c = 0; c < s_; ++c) {
            next = cur;
            next.insert(next.begin() + static_cast<std::ptrdiff_t>(i), c);
            const std::size_t to = index_of(next);
            if (dist[to] < 0) {
              dist[to] = d + 1;
              queue.push_back(to);
            }
          }
        }
      }
    }
    return dist;
  }

 private:
  std::uint32_t s_;
  std::size_t maxlen_;
  std::vector<std::size_t> offsets_;
};

// Uniformly random generator matrix of rank exactly k (rejection sampling).
inline insdel::LinearCode random_code(insdel::FieldPtr field, std::size_t n,
                                      std::size_t k, std::mt19937_64& rng) {
  std::uniform_int_distribution<std::uint32_t> dist(
      0, static_cast<std::uint32_t>(field->q() - 1));
  for (;;) {
    std::vector<std::uint32_t> gen(n * k);
    for (auto& g : gen) g = dist(rng);
    try {
      return insdel::LinearCode(field, n, k, std::move(gen));
    } catch (const std::invalid_argument&) {
      // rank-deficient sample; draw again
    }
  }
}

inline std::vector<std::uint32_t> random_word(std::uint64_t q, std::size_t len,
                                              std::mt19937_64& rng) {
  std::uniform_int_distribution<std::uint32_t> dist(
      0, static_cast<std::uint32_t>(q - 1));
  std::vector<std::uint32_t> w(len);
  for (auto& x : w) x = dist(rng);
  return w;
}

}  // namespace oracle

#endif  // INSDEL_TESTS_ORACLES_HPP
