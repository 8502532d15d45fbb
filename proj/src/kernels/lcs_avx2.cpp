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

// Compiled with -mavx2 (see src/CMakeLists.txt); only the dispatcher decides
// whether this translation unit's entry point is ever called.

#if defined(__x86_64__) || defined(_M_X64) || defined(__i386__)

#include <immintrin.h>

#include <array>
#include <cassert>
#include <cstring>
#include <utility>

#include "insdel/kernels/lcs_kernel.hpp"

namespace insdel::kernels {

namespace {

constexpr std::size_t kLanes = 16;  // 16-bit lanes in a 256-bit register

// One DP over a 16-pair tile. Lane r of every vector carries the DP state of
// pair (a, b_r). cols[j] holds symbol j of all 16 rows.
//
// Recurrence per cell: curr[j] = max(prev[j], curr[j-1], prev[j-1] + eq).
// cmpeq yields 0 or 0xFFFF, so prev[j-1] - mask adds the match bonus without
// a blend.
template <int LB>
void tile16(const std::uint16_t* a, std::size_t la, const std::uint16_t* cols16,
            std::uint8_t* out) {
  __m256i cols[LB];
  for (int j = 0; j < LB; ++j)
    cols[j] = _mm256_loadu_si256(
        reinterpret_cast<const __m256i*>(cols16 + static_cast<std::size_t>(j) * kLanes));
  __m256i prev[LB + 1];
  const __m256i zero = _mm256_setzero_si256();
  for (int j = 0; j <= LB; ++j) prev[j] = zero;
  for (std::size_t i = 0; i < la; ++i) {
    const __m256i va = _mm256_set1_epi16(static_cast<short>(a[i]));
    __m256i left = zero;          // curr[j-1], starts at curr[0] == 0
    __m256i diag = prev[0];       // prev[j-1]
    for (int j = 1; j <= LB; ++j) {
      const __m256i eq = _mm256_cmpeq_epi16(va, cols[j - 1]);
      const __m256i cand = _mm256_sub_epi16(diag, eq);
      const __m256i best = _mm256_max_epu16(_mm256_max_epu16(prev[j], left), cand);
      diag = prev[j];
      prev[j - 1] = left;         // prev row no longer needed at j-1
      left = best;
    }
    prev[LB] = left;
  }
  alignas(32) std::uint16_t res[kLanes];
  _mm256_store_si256(reinterpret_cast<__m256i*>(res), prev[LB]);
  for (std::size_t r = 0; r < kLanes; ++r) out[r] = static_cast<std::uint8_t>(res[r]);
}

using TileFn = void (*)(const std::uint16_t*, std::size_t, const std::uint16_t*,
                        std::uint8_t*);

template <std::size_t... I>
constexpr std::array<TileFn, sizeof...(I)> make_tile_table(std::index_sequence<I...>) {
  return {&tile16<static_cast<int>(I) + 1>...};
}

constexpr auto kTiles = make_tile_table(std::make_index_sequence<kMaxLen>{});

}  // namespace

void lcs_batch_avx2(const std::uint16_t* a, std::size_t la,
                    const std::uint16_t* b, std::size_t lb, std::size_t rows,
                    std::uint8_t* out) {
  assert(la <= kMaxLen && lb <= kMaxLen);
  if (la == 0 || lb == 0) {
    std::memset(out, 0, rows);
    return;
  }
  const TileFn tile = kTiles[lb - 1];
  alignas(32) std::uint16_t cols[kMaxLen * kLanes];
  std::size_t r = 0;
  for (; r + kLanes <= rows; r += kLanes) {
    const std::uint16_t* base = b + r * lb;
    for (std::size_t lane = 0; lane < kLanes; ++lane)
      for (std::size_t j = 0; j < lb; ++j)
        cols[j * kLanes + lane] = base[lane * lb + j];
    tile(a, la, cols, out + r);
  }
  if (r < rows) lcs_batch_scalar(a, la, b + r * lb, lb, rows - r, out + r);
}

}  // namespace insdel::kernels

#endif  // x86
