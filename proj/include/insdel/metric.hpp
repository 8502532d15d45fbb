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

#ifndef INSDEL_METRIC_HPP
#define INSDEL_METRIC_HPP

#include <cstdint>
#include <span>
#include <string>

#include "insdel/kernels/lcs_kernel.hpp"
#include "insdel/lincode.hpp"

namespace insdel {

/// Exact longest-common-subsequence length. Works for any symbol values and
/// any lengths; the batched u16 kernels cover the hot paths.
std::size_t lcs_length_u32(std::span<const std::uint32_t> a,
                           std::span<const std::uint32_t> b);
std::size_t lcs_length(const Codeword& a, const Codeword& b);

/// Insertion-deletion distance |a| + |b| - 2*LCS(a, b): the fewest insertions
/// plus deletions transforming a into b. For equal lengths n this is 2n - 2l.
int insdel_distance_u32(std::span<const std::uint32_t> a,
                        std::span<const std::uint32_t> b);
int insdel_distance(const Codeword& a, const Codeword& b);

enum class Method { kExhaustive, kNormalized, kWitnessOnly };
const char* method_name(Method m);

/// Outcome of a minimum-insdel-distance computation, self-contained enough to
/// re-check: the witness pair always attains d_insdel and lies in the code.
/// For Method::kWitnessOnly, d_insdel is a certified upper bound (the witness
/// pair's distance), not the exact minimum.
struct DistanceReport {
  FieldPtr field;
  std::size_t n = 0, k = 0;
  std::vector<std::uint32_t> generator;  // row-major, k x n
  int d_hamming = 0;
  int d_insdel = 0;
  Codeword witness_a, witness_b;
  int bound_improved = 0;   // 2n - 2k
  int bound_singleton = 0;  // 2n - 2k + 2
  Method method = Method::kExhaustive;
  std::uint64_t pairs_examined = 0;
  double elapsed_seconds = 0.0;  // excluded from determinism comparisons

  bool same_results(const DistanceReport& rhs) const;
};

struct BoundsVerdict {
  bool singleton_ok = false;        // d <= 2n - 2k + 2
  bool improved_applicable = false; // n > k >= 2
  bool improved_ok = false;         // d <= 2n - 2k (when applicable)
  bool meets_singleton = false;     // d == 2n - 2k + 2
  bool meets_improved = false;      // d == 2n - 2k
  bool violation() const {
    return !singleton_ok || (improved_applicable && !improved_ok);
  }
};

/// Flags which bounds hold / are attained. A violation here would mean the
/// report contradicts one of the verified distance bounds.
BoundsVerdict check_bounds(const DistanceReport& report);

/// Pair budget for the exhaustive engine: q^k (q^k - 1) / 2 <= 2^32 unordered
/// pairs. Beyond that the operation refuses; use witness_report or the
/// normalized engine for the two-dimensional power-locator codes.
inline constexpr std::uint64_t kPairBudget = std::uint64_t{1} << 32;

/// Exact minimum insdel distance by scanning every unordered pair of distinct
/// codewords. Witness tie-break: the lexicographically least rank pair among
/// the minimizers, so reports are reproducible and independent of the thread
/// count.
DistanceReport min_insdel_exhaustive(const LinearCode& code, unsigned threads = 0,
                                     kernels::Impl kernel = kernels::Impl::kAuto);

/// Two explicit codewords with a common subsequence of length >= k, built
/// from support codewords shaped (0,...,0,1,*,...,*) and (*,0,...,0,1,*,...):
/// dropping the head symbol of the second aligns its k leading symbols with
/// the first. Their distance certifies d(C) <= 2n - 2k with no enumeration.
/// Requires an MDS code with n > k >= 2.
struct WitnessPair {
  Codeword a, b;
  std::size_t lcs_bound;  // actual LCS length, always >= k
};
WitnessPair witness_pair(const LinearCode& code);

/// Packages witness_pair as a report (method kWitnessOnly, d_insdel is the
/// witness distance, an upper bound for d(C)).
DistanceReport witness_report(const LinearCode& code);

}  // namespace insdel

#endif  // INSDEL_METRIC_HPP
