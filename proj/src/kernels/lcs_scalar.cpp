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

#include <algorithm>
#include <cassert>
#include <cstring>

#include "insdel/kernels/lcs_kernel.hpp"

namespace insdel::kernels {

// Reference implementation: the plain two-row LCS recurrence, one pair at a
// time. Kept deliberately simple; the SIMD kernels are checked against it.
void lcs_batch_scalar(const std::uint16_t* a, std::size_t la,
                      const std::uint16_t* b, std::size_t lb, std::size_t rows,
                      std::uint8_t* out) {
  assert(la <= kMaxLen && lb <= kMaxLen);
  if (la == 0 || lb == 0) {
    std::memset(out, 0, rows);
    return;
  }
  for (std::size_t r = 0; r < rows; ++r) {
    const std::uint16_t* w = b + r * lb;
    std::uint32_t prev[kMaxLen + 1] = {0};
    std::uint32_t curr[kMaxLen + 1] = {0};
    for (std::size_t i = 0; i < la; ++i) {
      curr[0] = 0;
      for (std::size_t j = 1; j <= lb; ++j) {
        const std::uint32_t cand = prev[j - 1] + (a[i] == w[j - 1] ? 1u : 0u);
        curr[j] = std::max({prev[j], curr[j - 1], cand});
      }
      std::memcpy(prev, curr, sizeof(std::uint32_t) * (lb + 1));
    }
    out[r] = static_cast<std::uint8_t>(prev[lb]);
  }
}

}  // namespace insdel::kernels
