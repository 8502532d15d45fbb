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

#if defined(__aarch64__)

#include <arm_neon.h>

#include <array>
#include <cassert>
#include <cstring>
#include <utility>

#include "insdel/kernels/lcs_kernel.hpp"

namespace insdel::kernels {

namespace {

constexpr std::size_t kLanes = 8;  // 16-bit lanes in a 128-bit register

// Same lane-per-pair DP as the AVX2 kernel, eight pairs per tile.
template <int LB>
void tile8(const std::uint16_t* a, std::size_t la, const std::uint16_t* cols8,
           std::uint8_t* out) {
  uint16x8_t cols[LB];
  for (int j = 0; j < LB; ++j)
    cols[j] = vld1q_u16(cols8 + static_cast<std::size_t>(j) * kLanes);
  uint16x8_t prev[LB + 1];
  const uint16x8_t zero = vdupq_n_u16(0);
  for (int j = 0; j <= LB; ++j) prev[j] = zero;
  for (std::size_t i = 0; i < la; ++i) {
    const uint16x8_t va = vdupq_n_u16(a[i]);
    uint16x8_t left = zero;
    uint16x8_t diag = prev[0];
    for (int j = 1; j <= LB; ++j) {
      const uint16x8_t eq = vceqq_u16(va, cols[j - 1]);
      const uint16x8_t cand = vsubq_u16(diag, eq);  // eq is all-ones on match
      const uint16x8_t best = vmaxq_u16(vmaxq_u16(prev[j], left), cand);
      diag = prev[j];
      prev[j - 1] = left;
      left = best;
    }
    prev[LB] = left;
  }
  std::uint16_t res[kLanes];
  vst1q_u16(res, prev[LB]);
  for (std::size_t r = 0; r < kLanes; ++r) out[r] = static_cast<std::uint8_t>(res[r]);
}

using TileFn = void (*)(const std::uint16_t*, std::size_t, const std::uint16_t*,
                        std::uint8_t*);

template <std::size_t... I>
constexpr std::array<TileFn, sizeof...(I)> make_tile_table(std::index_sequence<I...>) {
  return {&tile8<static_cast<int>(I) + 1>...};
}

constexpr auto kTiles = make_tile_table(std::make_index_sequence<kMaxLen>{});

}  // namespace

void lcs_batch_neon(const std::uint16_t* a, std::size_t la,
                    const std::uint16_t* b, std::size_t lb, std::size_t rows,
                    std::uint8_t* out) {
  assert(la <= kMaxLen && lb <= kMaxLen);
  if (la == 0 || lb == 0) {
    std::memset(out, 0, rows);
    return;
  }
  const TileFn tile = kTiles[lb - 1];
  std::uint16_t cols[kMaxLen * kLanes];
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

#endif  // __aarch64__
