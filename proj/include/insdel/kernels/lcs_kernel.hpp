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

#ifndef INSDEL_KERNELS_LCS_KERNEL_HPP
#define INSDEL_KERNELS_LCS_KERNEL_HPP

#include <cstddef>
#include <cstdint>

namespace insdel::kernels {

/// Kernel contract: both sequence lengths are at most kMaxLen. All distance
/// scans in this project run on words of length <= 16, so DP values fit in a
/// 16-bit lane with room to spare.
inline constexpr std::size_t kMaxLen = 16;

/// Computes LCS(a, b_r) for a batch of `rows` sequences b_r against one fixed
/// sequence a. b is row-major: row r occupies b[r*lb .. r*lb+lb). One LCS
/// length per row is written to out.
using LcsBatchFn = void (*)(const std::uint16_t* a, std::size_t la,
                            const std::uint16_t* b, std::size_t lb,
                            std::size_t rows, std::uint8_t* out);

enum class Impl { kAuto, kScalar, kAvx2, kNeon };

/// Scalar reference kernel. Always available; the SIMD variants are
/// equivalence-tested against it.
void lcs_batch_scalar(const std::uint16_t* a, std::size_t la,
                      const std::uint16_t* b, std::size_t lb, std::size_t rows,
                      std::uint8_t* out);

#if defined(__x86_64__) || defined(_M_X64) || defined(__i386__)
void lcs_batch_avx2(const std::uint16_t* a, std::size_t la,
                    const std::uint16_t* b, std::size_t lb, std::size_t rows,
                    std::uint8_t* out);
#endif
#if defined(__aarch64__)
void lcs_batch_neon(const std::uint16_t* a, std::size_t la,
                    const std::uint16_t* b, std::size_t lb, std::size_t rows,
                    std::uint8_t* out);
#endif

/// True when the implementation can run on this machine.
bool available(Impl impl);
const char* name(Impl impl);

/// Resolves kAuto to the fastest available implementation, honoring any
/// process-wide override installed with set_default_impl.
Impl resolve(Impl impl);

/// Returns the kernel entry point for `impl`; throws std::invalid_argument
/// when the implementation is unavailable on this machine.
LcsBatchFn select(Impl impl = Impl::kAuto);

/// Process-wide default used when callers pass kAuto (set from the CLI
/// --kernel flag). kAuto means "detect".
void set_default_impl(Impl impl);
Impl default_impl();

Impl impl_from_name(const char* s);

}  // namespace insdel::kernels

#endif  // INSDEL_KERNELS_LCS_KERNEL_HPP
