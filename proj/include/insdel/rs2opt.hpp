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

#ifndef INSDEL_RS2OPT_HPP
#define INSDEL_RS2OPT_HPP

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "insdel/metric.hpp"

namespace insdel {

/// Strictly increasing exponents 0 <= i_1 < ... < i_n. Bound to a field they
/// select the locators theta^{i_1}, ..., theta^{i_n} of a two-dimensional
/// code {(lambda + mu*theta^{i_j})_j}.
class ExponentSet {
 public:
  explicit ExponentSet(std::vector<std::uint32_t> exps);

  std::size_t n() const { return exps_.size(); }
  const std::vector<std::uint32_t>& exps() const { return exps_; }
  std::uint32_t at(std::size_t idx) const { return exps_[idx]; }  // 0-based

  /// All differences i_j - i_k for k < j, duplicates collapsed, ascending.
  std::vector<std::uint32_t> difference_set() const;

  bool operator==(const ExponentSet& rhs) const { return exps_ == rhs.exps_; }

 private:
  std::vector<std::uint32_t> exps_;
};

/// Condition (1): i_{n-1} + i_n < e (the two largest exponents).
bool check_condition1(const ExponentSet& exps, std::uint32_t e);

/// Condition (2): all n(n-1)/2 pairwise differences are distinct.
bool check_condition2(const ExponentSet& exps);

/// The doubling family i_j = 2^{j-1} together with the least extension degree
/// min_e = 3*2^{n-2} + 1 that satisfies condition (1). Any prime p works.
struct CorollaryCFamily {
  ExponentSet exps;
  std::uint32_t min_e;
};
CorollaryCFamily corollary_c_exponents(std::uint32_t n);

/// Integer-coefficient sparse polynomial; terms with cancelled coefficients
/// are never stored.
class SparsePolynomial {
 public:
  void add_term(std::uint64_t exponent, std::int64_t coeff);
  bool empty() const { return terms_.empty(); }
  std::optional<std::uint64_t> degree() const;
  std::optional<std::pair<std::uint64_t, std::int64_t>> min_term() const;
  const std::map<std::uint64_t, std::int64_t>& terms() const { return terms_; }

  /// Copy with every coefficient reduced mod p (zero coefficients dropped).
  SparsePolynomial reduced_mod(std::uint32_t p) const;

  /// Evaluate at x over the field; coefficients are taken mod p.
  std::uint32_t evaluate(const Field& field, std::uint32_t x) const;

  bool operator==(const SparsePolynomial& rhs) const { return terms_ == rhs.terms_; }

 private:
  std::map<std::uint64_t, std::int64_t> terms_;
};

/// The [n,2] code of the power locators: generator rows (1,...,1) and
/// (theta^{i_1}, ..., theta^{i_n}). theta must be primitive; distinct
/// exponents in [0, q-2] make the locators automatically distinct.
LinearCode build_rs2(FieldPtr field, std::uint32_t theta, const ExponentSet& exps);

/// Index triples are 1-based positions into the exponent sequence, as in the
/// determinant expansion they feed; they must be strictly increasing in
/// [1, n].
using IndexTriple = std::array<std::uint32_t, 3>;

/// The six-term determinant polynomial
///   x^{i_{k1}+i_{r2}} + x^{i_{k2}+i_{r3}} + x^{i_{k3}+i_{r1}}
/// - x^{i_{k1}+i_{r3}} - x^{i_{k2}+i_{r1}} - x^{i_{k3}+i_{r2}},
/// with coinciding exponents cancelled over the integers. It vanishes
/// identically exactly when the two triples coincide.
SparsePolynomial case6_polynomial(const ExponentSet& exps, const IndexTriple& k_triple,
                                  const IndexTriple& r_triple);

struct Case6Failure {
  IndexTriple k_triple{}, r_triple{};
  std::string reason;
};

/// Certificate that no codeword pair of the mixed form can agree on three
/// coordinate triples. For each ordered pair of distinct triples the
/// determinant polynomial must stay nonzero after mod-p reduction, keep its
/// minimum-degree term at one of the two low-exponent candidates, have degree
/// below e, and evaluate to nonzero at theta. Coincident triples degenerate
/// the polynomial to zero and are certified by the direct argument instead: a
/// nonzero constant offset would force two distinct powers of theta to
/// collide, which distinct exponents in [0, q-2] rule out.
struct Case6Report {
  bool cond1 = false;
  bool cond2 = false;
  bool preconditions_ok = false;  // cond1 && cond2
  bool certified = false;
  std::uint64_t distinct_pairs_checked = 0;
  std::uint64_t coincident_checked = 0;
  std::vector<Case6Failure> failures;
};
Case6Report verify_case6_all(const ExponentSet& exps, const Field& field,
                             std::uint32_t theta);

/// Field-size budget for the normalized engine: q <= 2^14 keeps the
/// 2(q^2 - 1) LCS scan in the seconds-to-minutes range.
inline constexpr std::uint64_t kNormalizedMaxQ = std::uint64_t{1} << 14;

/// Exact minimum insdel distance of the power-locator [n,2] code, via affine
/// orbit reduction instead of the full pair triangle.
///
/// The maps x -> alpha*x + beta (alpha != 0) permute the alphabet, act
/// componentwise, and therefore preserve LCS lengths; on code elements they
/// send c(lambda, mu) to c(alpha*lambda + beta, alpha*mu). Any ordered pair
/// of distinct codewords can thus be normalized so its first element becomes
/// c(0,0) (when mu = 0, via beta = -lambda) or c(0,1) (when mu != 0, via
/// alpha = mu^-1, beta = -lambda*mu^-1). Scanning those two representatives
/// against all other codewords covers every pair distance, shrinking the
/// search from q^4/2 to 2(q^2 - 1) distance evaluations.
DistanceReport min_insdel_normalized(FieldPtr field, std::uint32_t theta,
                                     const ExponentSet& exps, unsigned threads = 0,
                                     kernels::Impl kernel = kernels::Impl::kAuto);

/// Combined verdict: both conditions with their numeric evidence, the
/// determinant certificate (evaluated only when both conditions hold), the
/// claimed distance 2n-4, and optionally the measured distance.
struct TheoremBVerdict {
  FieldPtr field;
  std::uint32_t theta = 0;
  std::vector<std::uint32_t> exps;
  bool cond1 = false;
  std::uint32_t cond1_sum = 0;  // i_{n-1} + i_n
  bool cond2 = false;
  std::uint32_t cond2_count = 0;     // |difference set|
  std::uint32_t cond2_required = 0;  // n(n-1)/2
  std::optional<Case6Report> case6;
  std::optional<int> claimed_distance;  // 2n-4, set iff cond1 && cond2
  std::optional<DistanceReport> measured;
};

TheoremBVerdict verify_theorem_b(FieldPtr field, const ExponentSet& exps,
                                 bool check_distance = false, unsigned threads = 0,
                                 std::optional<std::uint32_t> theta = std::nullopt,
                                 kernels::Impl kernel = kernels::Impl::kAuto);

}  // namespace insdel

#endif  // INSDEL_RS2OPT_HPP
