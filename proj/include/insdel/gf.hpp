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

#ifndef INSDEL_GF_HPP
#define INSDEL_GF_HPP

#include <cstdint>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace insdel {

/// Thrown when an operation would exceed one of the documented search or
/// enumeration budgets. Callers get a hard failure instead of a multi-day run.
class BudgetExceeded : public std::runtime_error {
 public:
  explicit BudgetExceeded(const std::string& msg) : std::runtime_error(msg) {}
};

class Field;
using FieldPtr = std::shared_ptr<const Field>;

/// Exact arithmetic in GF(p^e).
///
/// Elements live in canonical reduced form and are addressed by their integer
/// code sum_t c_t * p^t, where (c_0, ..., c_{e-1}) is the coefficient sequence
/// of the representative polynomial, constant term first. Code 0 is the zero
/// element, code 1 the multiplicative identity, and for e > 1 code p is the
/// class of x.
///
/// A Field is immutable after construction; every operation is a pure
/// function, safe for unrestricted concurrent use.
class Field : public std::enable_shared_from_this<Field> {
 public:
  /// Cardinality cap. Keeps q-1 trivially factorable and all element codes
  /// inside 32 bits with room to spare.
  static constexpr std::uint64_t kMaxQ = std::uint64_t{1} << 20;

  std::uint32_t p() const { return p_; }
  std::uint32_t e() const { return e_; }
  std::uint64_t q() const { return q_; }

  /// Monic modulus of degree e, constant term first (size e+1). For e == 1
  /// this is the polynomial x, so arithmetic degenerates to integers mod p.
  const std::vector<std::uint32_t>& modulus() const { return modulus_; }

  /// Two Field objects describe the same field iff (p, e, modulus) agree.
  /// Elements interoperate exactly in that case.
  bool same_spec(const Field& other) const;

  std::uint32_t add(std::uint32_t a, std::uint32_t b) const;
  std::uint32_t sub(std::uint32_t a, std::uint32_t b) const;
  std::uint32_t neg(std::uint32_t a) const;
  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const;
  std::uint32_t inv(std::uint32_t a) const;  // throws on zero
  std::uint32_t div(std::uint32_t a, std::uint32_t b) const;

  /// a^m with m possibly negative (negative exponents go through inv).
  /// 0^0 is 1 by convention, 0^m is 0 for m > 0 and an error for m < 0.
  std::uint32_t pow(std::uint32_t a, std::int64_t m) const;

  /// Least m >= 1 with a^m = 1. Computed by stripping prime factors from
  /// q-1, never by naive iteration. Throws on zero input.
  std::uint64_t element_order(std::uint32_t a) const;

  bool is_primitive(std::uint32_t a) const;

  /// First element in ascending code order whose order is q-1. Deterministic
  /// across runs; cached at construction.
  std::uint32_t primitive_element() const { return primitive_; }

  /// All q element codes, ascending. Ascending code order sorts coefficient
  /// sequences by highest-degree coefficient first; it is the enumeration
  /// order used everywhere (primitive search, message ranking).
  std::vector<std::uint32_t> element_codes() const;

  std::vector<std::uint32_t> to_coeffs(std::uint32_t code) const;
  std::uint32_t from_coeffs(const std::vector<std::uint32_t>& coeffs) const;

  /// Human-readable polynomial form, e.g. "x^2+x+1"; plain integer for e==1.
  std::string format_element(std::uint32_t code) const;
  std::string format_modulus() const;

  /// Distinct prime factors of q-1.
  const std::vector<std::uint64_t>& group_order_factors() const { return factors_; }

  static FieldPtr create(std::uint32_t p, std::uint32_t e,
                         std::optional<std::vector<std::uint32_t>> modulus);

 private:
  Field(std::uint32_t p, std::uint32_t e, std::vector<std::uint32_t> modulus);

  std::uint32_t mul_slow(std::uint32_t a, std::uint32_t b) const;
  std::uint32_t add_slow(std::uint32_t a, std::uint32_t b) const;

  std::uint32_t p_;
  std::uint32_t e_;
  std::uint64_t q_;
  std::vector<std::uint32_t> modulus_;
  std::uint64_t modulus_bits_ = 0;  // p == 2: modulus as bitmask
  std::vector<std::uint64_t> pow_p_;  // p^0 .. p^e
  std::vector<std::uint64_t> factors_;
  std::uint32_t primitive_ = 0;
  // small fields carry full operation tables
  bool tabulated_ = false;
  std::vector<std::uint16_t> add_tab_, mul_tab_;
  std::vector<std::uint16_t> inv_tab_, neg_tab_;
};

/// Builds GF(p^e). With no modulus supplied, picks the first monic
/// irreducible polynomial of degree e in ascending order of the base-p
/// integer encoding of the coefficient sequence (constant term least
/// significant), so repeated calls always agree.
FieldPtr make_field(std::uint32_t p, std::uint32_t e);
FieldPtr make_field(std::uint32_t p, std::uint32_t e,
                    const std::vector<std::uint32_t>& modulus);

/// First `count` monic irreducible degree-e polynomials over GF(p), in the
/// same deterministic order make_field uses. Handy for cross-checking that
/// results do not depend on the modulus choice.
std::vector<std::vector<std::uint32_t>> irreducible_moduli(std::uint32_t p,
                                                           std::uint32_t e,
                                                           std::size_t count);

bool is_prime(std::uint64_t n);

/// An element bound to its field. Operations check that both operands belong
/// to the same field spec and throw std::invalid_argument otherwise.
class FieldElement {
 public:
  FieldElement() = default;
  FieldElement(FieldPtr field, std::uint32_t code);

  const FieldPtr& field() const { return field_; }
  std::uint32_t code() const { return code_; }
  std::vector<std::uint32_t> coeffs() const { return field_->to_coeffs(code_); }

  FieldElement operator+(const FieldElement& rhs) const;
  FieldElement operator-(const FieldElement& rhs) const;
  FieldElement operator*(const FieldElement& rhs) const;
  FieldElement operator/(const FieldElement& rhs) const;
  FieldElement operator-() const;
  FieldElement inverse() const;
  FieldElement pow(std::int64_t m) const;
  std::uint64_t order() const;

  bool operator==(const FieldElement& rhs) const;
  bool operator!=(const FieldElement& rhs) const { return !(*this == rhs); }

 private:
  void check_same(const FieldElement& rhs) const;
  FieldPtr field_;
  std::uint32_t code_ = 0;
};

}  // namespace insdel

#endif  // INSDEL_GF_HPP
