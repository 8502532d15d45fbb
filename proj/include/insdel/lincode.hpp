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

#ifndef INSDEL_LINCODE_HPP
#define INSDEL_LINCODE_HPP

#include <cstdint>
#include <optional>
#include <set>
#include <span>
#include <vector>

#include "insdel/gf.hpp"

namespace insdel {

/// A sequence of symbols over one field. Used both for codewords and for
/// channel outputs (whose length may differ from n).
struct Codeword {
  FieldPtr field;
  std::vector<std::uint32_t> symbols;

  std::size_t size() const { return symbols.size(); }
  bool operator==(const Codeword& rhs) const {
    return field && rhs.field && field->same_spec(*rhs.field) &&
           symbols == rhs.symbols;
  }
  bool operator!=(const Codeword& rhs) const { return !(*this == rhs); }
};

/// Number of coordinates where two equal-length words differ.
std::size_t hamming_distance(const Codeword& a, const Codeword& b);
std::size_t hamming_weight(const Codeword& a);

/// A k-dimensional linear code of length n over GF(q), held as a rank-k
/// generator matrix. Immutable after construction.
///
/// Message vectors are ranked lexicographically with the first coordinate
/// most significant; codeword rank r encodes the message whose digits are the
/// base-q expansion of r. Rank 0 is always the zero codeword. Coordinates are
/// 0-based everywhere.
class LinearCode {
 public:
  /// Codeword-enumeration budget for exhaustive scans (Hamming weight scans,
  /// nearest-codeword decoding): q^k <= 2^26.
  static constexpr std::uint64_t kEnumBudget = std::uint64_t{1} << 26;

  LinearCode(FieldPtr field, std::size_t n, std::size_t k,
             std::vector<std::uint32_t> generator_row_major);

  /// Reed-Solomon code: row t of the generator is (loc_1^t, ..., loc_n^t), so
  /// the code is {(f(loc_1), ..., f(loc_n)) : deg f < k}. Locators must be
  /// pairwise distinct and 1 <= k < n.
  static LinearCode reed_solomon(FieldPtr field,
                                 const std::vector<std::uint32_t>& locators,
                                 std::size_t k);

  const FieldPtr& field() const { return field_; }
  std::size_t n() const { return n_; }
  std::size_t k() const { return k_; }
  const std::vector<std::uint32_t>& generator() const { return gen_; }
  std::span<const std::uint32_t> row(std::size_t t) const {
    return {gen_.data() + t * n_, n_};
  }
  std::uint32_t at(std::size_t t, std::size_t j) const { return gen_[t * n_ + j]; }

  /// Set when the code was built by the Reed-Solomon factory, in which case
  /// it is MDS by construction.
  bool rs_constructed() const { return rs_constructed_; }

  /// q^k, or nullopt when it overflows 2^63.
  std::optional<std::uint64_t> codeword_count() const;
  std::uint64_t enum_count_or_throw(const char* op) const;

  Codeword encode(const std::vector<std::uint32_t>& message) const;
  std::vector<std::uint32_t> message_of_rank(std::uint64_t rank) const;

  /// Minimum Hamming weight over the q^k - 1 nonzero codewords (linearity:
  /// no pair comparisons). Throws BudgetExceeded past kEnumBudget.
  int min_hamming_distance(unsigned threads = 0) const;

  /// d_H == n - k + 1.
  bool is_mds(unsigned threads = 0) const;

  /// The codeword that vanishes exactly on `zero_positions` (k-1 indices),
  /// equals 1 at `unit_position` and is nonzero everywhere else. Exists for
  /// every such index choice precisely because the code is MDS; found by
  /// solving the k x k system on the selected generator columns. Requires an
  /// MDS code with n > k >= 2.
  Codeword mds_support_codeword(const std::set<std::size_t>& zero_positions,
                                std::size_t unit_position) const;

  /// All q^k codewords in rank order. Convenience for small codes; the
  /// streaming interface below is what scans use.
  std::vector<Codeword> enumerate_codewords() const;

  bool operator==(const LinearCode& rhs) const;

 private:
  void require_mds() const;

  FieldPtr field_;
  std::size_t n_ = 0, k_ = 0;
  std::vector<std::uint32_t> gen_;
  bool rs_constructed_ = false;
};

/// Rank-ordered codeword stream. Maintains partial row sums so that stepping
/// to the next codeword costs O(n) field additions (amortized).
class CodewordStream {
 public:
  explicit CodewordStream(const LinearCode& code);

  void seek(std::uint64_t rank);

  /// Writes `count` consecutive codewords (from the current position) as
  /// rows of a dense matrix. The u16 variants require q <= 65536.
  void fill_u16(std::uint16_t* rows, std::size_t count);
  void fill_u32(std::uint32_t* rows, std::size_t count);

 private:
  void advance();
  void recompute_partials(std::size_t from_level);

  const LinearCode* code_;
  std::uint64_t q_ = 0;
  std::size_t n_ = 0, k_ = 0;
  std::vector<std::uint32_t> digits_;
  // multiples_[t][c] = c * row_t, a q x n table per row
  std::vector<std::vector<std::uint32_t>> multiples_;
  // partials_[t] = sum of digit-scaled rows 0..t-1 (partials_[0] is zero)
  std::vector<std::vector<std::uint32_t>> partials_;
};

}  // namespace insdel

#endif  // INSDEL_LINCODE_HPP
