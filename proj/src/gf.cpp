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

#include "insdel/gf.hpp"

#include <algorithm>
#include <array>
#include <cstddef>
#include <sstream>

namespace insdel {

namespace {

// ---------------------------------------------------------------------------
// Dense polynomial arithmetic over GF(p), used only for modulus selection and
// irreducibility testing. Coefficients are stored constant term first.
// ---------------------------------------------------------------------------

using Poly = std::vector<std::uint32_t>;

void poly_trim(Poly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

int poly_deg(const Poly& f) { return static_cast<int>(f.size()) - 1; }

// f mod g, g monic.
Poly poly_mod(Poly f, const Poly& g, std::uint64_t p) {
  poly_trim(f);
  const int dg = poly_deg(g);
  while (poly_deg(f) >= dg) {
    const std::uint64_t lead = f.back();
    const int shift = poly_deg(f) - dg;
    for (int i = 0; i <= dg; ++i) {
      std::uint64_t v = f[i + shift] + p * p - lead * g[i] % p;
      f[i + shift] = static_cast<std::uint32_t>(v % p);
    }
    poly_trim(f);
  }
  return f;
}

Poly poly_mulmod(const Poly& a, const Poly& b, const Poly& g, std::uint64_t p) {
  if (a.empty() || b.empty()) return {};
  Poly prod(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      prod[i + j] = static_cast<std::uint32_t>(
          (prod[i + j] + static_cast<std::uint64_t>(a[i]) * b[j]) % p);
    }
  }
  return poly_mod(std::move(prod), g, p);
}

// x^n mod g by binary exponentiation.
Poly poly_xpow(std::uint64_t n, const Poly& g, std::uint64_t p) {
  Poly result{1};
  Poly base = poly_mod(Poly{0, 1}, g, p);
  while (n > 0) {
    if (n & 1) result = poly_mulmod(result, base, g, p);
    base = poly_mulmod(base, base, g, p);
    n >>= 1;
  }
  return result;
}

Poly poly_sub(Poly a, const Poly& b, std::uint64_t p) {
  if (a.size() < b.size()) a.resize(b.size(), 0);
  for (std::size_t i = 0; i < b.size(); ++i)
    a[i] = static_cast<std::uint32_t>((a[i] + p - b[i]) % p);
  poly_trim(a);
  return a;
}

Poly poly_gcd(Poly a, Poly b, std::uint64_t p) {
  poly_trim(a);
  poly_trim(b);
  while (!b.empty()) {
    // make b monic before reducing
    Poly bm = b;
    std::uint64_t lead = bm.back();
    if (lead != 1) {
      // lead^(p-2) mod p inverts lead in the prime field
      std::uint64_t li = 1, base = lead, m = p - 2;
      while (m) {
        if (m & 1) li = li * base % p;
        base = base * base % p;
        m >>= 1;
      }
      for (auto& c : bm) c = static_cast<std::uint32_t>(c * li % p);
    }
    Poly r = poly_mod(std::move(a), bm, p);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

std::vector<std::uint64_t> distinct_prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

// Distinct-degree criterion: monic f of degree e over GF(p) is irreducible
// iff x^(p^e) == x mod f and gcd(x^(p^(e/r)) - x, f) is constant for every
// prime r dividing e.
bool poly_irreducible(const Poly& f, std::uint32_t p) {
  const int e = poly_deg(f);
  if (e < 1) return false;
  if (e == 1) return true;
  std::uint64_t pe = 1;
  for (int i = 0; i < e; ++i) pe *= p;
  const Poly x{0, 1};
  if (poly_sub(poly_xpow(pe, f, p), poly_mod(x, f, p), p) != Poly{}) return false;
  for (std::uint64_t r : distinct_prime_factors(static_cast<std::uint64_t>(e))) {
    std::uint64_t pj = 1;
    for (std::uint64_t i = 0; i < static_cast<std::uint64_t>(e) / r; ++i) pj *= p;
    Poly diff = poly_sub(poly_xpow(pj, f, p), poly_mod(x, f, p), p);
    if (poly_deg(poly_gcd(f, diff, p)) > 0) return false;
  }
  return true;
}

Poly modulus_from_encoding(std::uint64_t low, std::uint32_t p, std::uint32_t e) {
  Poly f(e + 1, 0);
  for (std::uint32_t i = 0; i < e; ++i) {
    f[i] = static_cast<std::uint32_t>(low % p);
    low /= p;
  }
  f[e] = 1;
  return f;
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

Field::Field(std::uint32_t p, std::uint32_t e, std::vector<std::uint32_t> modulus)
    : p_(p), e_(e), modulus_(std::move(modulus)) {
  pow_p_.resize(e_ + 1);
  pow_p_[0] = 1;
  for (std::uint32_t i = 1; i <= e_; ++i) pow_p_[i] = pow_p_[i - 1] * p_;
  q_ = pow_p_[e_];
  if (p_ == 2) {
    for (std::uint32_t i = 0; i <= e_; ++i)
      if (modulus_[i]) modulus_bits_ |= std::uint64_t{1} << i;
  }
  factors_ = distinct_prime_factors(q_ - 1);

  if (q_ <= 256) {
    const std::size_t q = static_cast<std::size_t>(q_);
    add_tab_.resize(q * q);
    mul_tab_.resize(q * q);
    inv_tab_.assign(q, 0);
    neg_tab_.resize(q);
    for (std::size_t a = 0; a < q; ++a) {
      for (std::size_t b = 0; b < q; ++b) {
        add_tab_[a * q + b] = static_cast<std::uint16_t>(
            add_slow(static_cast<std::uint32_t>(a), static_cast<std::uint32_t>(b)));
        mul_tab_[a * q + b] = static_cast<std::uint16_t>(
            mul_slow(static_cast<std::uint32_t>(a), static_cast<std::uint32_t>(b)));
      }
    }
    // negatives and inverses by scan; q is tiny here
    for (std::size_t a = 0; a < q; ++a) {
      for (std::size_t b = 0; b < q; ++b) {
        if (add_tab_[a * q + b] == 0) neg_tab_[a] = static_cast<std::uint16_t>(b);
        if (a != 0 && mul_tab_[a * q + b] == 1)
          inv_tab_[a] = static_cast<std::uint16_t>(b);
      }
    }
    tabulated_ = true;
  }

  // first element (ascending code order) of order q-1
  for (std::uint32_t c = 1; c < q_; ++c) {
    if (element_order(c) == q_ - 1) {
      primitive_ = c;
      break;
    }
  }
}

FieldPtr Field::create(std::uint32_t p, std::uint32_t e,
                       std::optional<std::vector<std::uint32_t>> modulus) {
  if (!is_prime(p)) throw std::invalid_argument("field characteristic must be prime");
  if (e < 1) throw std::invalid_argument("extension degree must be >= 1");
  std::uint64_t q = 1;
  for (std::uint32_t i = 0; i < e; ++i) {
    q *= p;
    if (q > kMaxQ)
      throw std::invalid_argument("field cardinality p^e exceeds the 2^20 cap");
  }

  std::vector<std::uint32_t> mod;
  if (modulus) {
    mod = *modulus;
    if (mod.size() != static_cast<std::size_t>(e) + 1)
      throw std::invalid_argument("modulus must have degree e (e+1 coefficients)");
    for (auto c : mod)
      if (c >= p) throw std::invalid_argument("modulus coefficient out of range [0, p)");
    if (mod[e] != 1) throw std::invalid_argument("modulus must be monic");
    if (!poly_irreducible(mod, p))
      throw std::invalid_argument("modulus is reducible over GF(p)");
  } else if (e == 1) {
    mod = {0, 1};  // the polynomial x
  } else {
    std::uint64_t lows = 1;
    for (std::uint32_t i = 0; i < e; ++i) lows *= p;
    bool found = false;
    for (std::uint64_t low = 0; low < lows; ++low) {
      Poly f = modulus_from_encoding(low, p, e);
      if (poly_irreducible(f, p)) {
        mod = std::move(f);
        found = true;
        break;
      }
    }
    if (!found)  // cannot happen: irreducibles of every degree exist
      throw std::logic_error("no irreducible modulus found");
  }
  return FieldPtr(new Field(p, e, std::move(mod)));
}

FieldPtr make_field(std::uint32_t p, std::uint32_t e) {
  return Field::create(p, e, std::nullopt);
}

FieldPtr make_field(std::uint32_t p, std::uint32_t e,
                    const std::vector<std::uint32_t>& modulus) {
  return Field::create(p, e, modulus);
}

std::vector<std::vector<std::uint32_t>> irreducible_moduli(std::uint32_t p,
                                                           std::uint32_t e,
                                                           std::size_t count) {
  if (!is_prime(p)) throw std::invalid_argument("field characteristic must be prime");
  if (e < 1) throw std::invalid_argument("extension degree must be >= 1");
  std::vector<std::vector<std::uint32_t>> out;
  if (e == 1) {
    if (count >= 1) out.push_back({0, 1});
    return out;
  }
  std::uint64_t lows = 1;
  for (std::uint32_t i = 0; i < e; ++i) lows *= p;
  for (std::uint64_t low = 0; low < lows && out.size() < count; ++low) {
    Poly f = modulus_from_encoding(low, p, e);
    if (poly_irreducible(f, p)) out.push_back(std::move(f));
  }
  return out;
}

bool Field::same_spec(const Field& other) const {
  return p_ == other.p_ && e_ == other.e_ && modulus_ == other.modulus_;
}

std::uint32_t Field::add_slow(std::uint32_t a, std::uint32_t b) const {
  if (p_ == 2) return a ^ b;
  if (e_ == 1) {
    std::uint64_t s = static_cast<std::uint64_t>(a) + b;
    return static_cast<std::uint32_t>(s >= q_ ? s - q_ : s);
  }
  std::uint32_t out = 0;
  for (std::uint32_t i = 0; i < e_; ++i) {
    std::uint32_t da = a % p_, db = b % p_;
    a /= p_;
    b /= p_;
    std::uint32_t s = da + db;
    if (s >= p_) s -= p_;
    out += s * static_cast<std::uint32_t>(pow_p_[i]);
  }
  return out;
}

std::uint32_t Field::add(std::uint32_t a, std::uint32_t b) const {
  if (p_ == 2) return a ^ b;
  if (tabulated_) return add_tab_[static_cast<std::size_t>(a) * q_ + b];
  return add_slow(a, b);
}

std::uint32_t Field::neg(std::uint32_t a) const {
  if (p_ == 2) return a;
  if (tabulated_) return neg_tab_[a];
  if (e_ == 1) return a == 0 ? 0 : static_cast<std::uint32_t>(q_ - a);
  std::uint32_t out = 0;
  for (std::uint32_t i = 0; i < e_; ++i) {
    std::uint32_t da = a % p_;
    a /= p_;
    out += (da == 0 ? 0 : p_ - da) * static_cast<std::uint32_t>(pow_p_[i]);
  }
  return out;
}

std::uint32_t Field::sub(std::uint32_t a, std::uint32_t b) const {
  if (p_ == 2) return a ^ b;
  return add(a, neg(b));
}

std::uint32_t Field::mul_slow(std::uint32_t a, std::uint32_t b) const {
  if (a == 0 || b == 0) return 0;
  if (e_ == 1) {
    return static_cast<std::uint32_t>(static_cast<std::uint64_t>(a) * b % q_);
  }
  if (p_ == 2) {
    // carryless multiply, then reduce by the modulus bitmask
    std::uint64_t acc = 0;
    std::uint64_t aa = a;
    std::uint32_t bb = b;
    while (bb) {
      if (bb & 1) acc ^= aa;
      aa <<= 1;
      bb >>= 1;
    }
    for (int bit = 2 * static_cast<int>(e_) - 2; bit >= static_cast<int>(e_); --bit) {
      if (acc >> bit & 1) acc ^= modulus_bits_ << (bit - e_);
    }
    return static_cast<std::uint32_t>(acc);
  }
  // schoolbook product of the coefficient sequences, then reduction
  std::array<std::uint64_t, 64> prod{};
  std::array<std::uint32_t, 32> da{}, db{};
  std::uint32_t ta = a, tb = b;
  for (std::uint32_t i = 0; i < e_; ++i) {
    da[i] = ta % p_;
    ta /= p_;
    db[i] = tb % p_;
    tb /= p_;
  }
  for (std::uint32_t i = 0; i < e_; ++i) {
    if (da[i] == 0) continue;
    for (std::uint32_t j = 0; j < e_; ++j)
      prod[i + j] += static_cast<std::uint64_t>(da[i]) * db[j];
  }
  for (auto& c : prod) c %= p_;
  for (int d = 2 * static_cast<int>(e_) - 2; d >= static_cast<int>(e_); --d) {
    const std::uint64_t lead = prod[d] % p_;
    if (lead == 0) continue;
    for (std::uint32_t i = 0; i <= e_; ++i) {
      std::uint64_t& c = prod[d - e_ + i];
      c = (c + static_cast<std::uint64_t>(p_) * p_ - lead * modulus_[i] % p_) % p_;
    }
  }
  std::uint32_t out = 0;
  for (std::uint32_t i = 0; i < e_; ++i)
    out += static_cast<std::uint32_t>(prod[i]) * static_cast<std::uint32_t>(pow_p_[i]);
  return out;
}

std::uint32_t Field::mul(std::uint32_t a, std::uint32_t b) const {
  if (tabulated_) return mul_tab_[static_cast<std::size_t>(a) * q_ + b];
  return mul_slow(a, b);
}

std::uint32_t Field::pow(std::uint32_t a, std::int64_t m) const {
  if (m < 0) {
    a = inv(a);
    m = -m;
  }
  std::uint32_t result = 1;
  std::uint64_t n = static_cast<std::uint64_t>(m);
  while (n) {
    if (n & 1) result = mul(result, a);
    a = mul(a, a);
    n >>= 1;
  }
  return result;
}

std::uint32_t Field::inv(std::uint32_t a) const {
  if (a == 0) throw std::invalid_argument("division by zero in GF(p^e)");
  if (tabulated_) return inv_tab_[a];
  return pow(a, static_cast<std::int64_t>(q_) - 2);
}

std::uint32_t Field::div(std::uint32_t a, std::uint32_t b) const {
  return mul(a, inv(b));
}

std::uint64_t Field::element_order(std::uint32_t a) const {
  if (a == 0) throw std::invalid_argument("zero has no multiplicative order");
  std::uint64_t m = q_ - 1;
  for (std::uint64_t r : factors_) {
    while (m % r == 0 && pow(a, static_cast<std::int64_t>(m / r)) == 1) m /= r;
  }
  return m;
}

bool Field::is_primitive(std::uint32_t a) const {
  return a != 0 && element_order(a) == q_ - 1;
}

std::vector<std::uint32_t> Field::element_codes() const {
  std::vector<std::uint32_t> out(q_);
  for (std::uint64_t i = 0; i < q_; ++i) out[i] = static_cast<std::uint32_t>(i);
  return out;
}

std::vector<std::uint32_t> Field::to_coeffs(std::uint32_t code) const {
  std::vector<std::uint32_t> out(e_);
  for (std::uint32_t i = 0; i < e_; ++i) {
    out[i] = code % p_;
    code /= p_;
  }
  return out;
}

std::uint32_t Field::from_coeffs(const std::vector<std::uint32_t>& coeffs) const {
  if (coeffs.size() != e_)
    throw std::invalid_argument("coefficient sequence must have length e");
  std::uint32_t out = 0;
  for (std::uint32_t i = 0; i < e_; ++i) {
    if (coeffs[i] >= p_)
      throw std::invalid_argument("element coefficient out of range [0, p)");
    out += coeffs[i] * static_cast<std::uint32_t>(pow_p_[i]);
  }
  return out;
}

namespace {
std::string format_poly(const std::vector<std::uint32_t>& coeffs, bool prime_field) {
  if (prime_field) return std::to_string(coeffs.empty() ? 0 : coeffs[0]);
  std::ostringstream os;
  bool first = true;
  for (int i = static_cast<int>(coeffs.size()) - 1; i >= 0; --i) {
    if (coeffs[i] == 0) continue;
    if (!first) os << "+";
    if (i == 0 || coeffs[i] != 1) os << coeffs[i];
    if (i >= 1) {
      if (coeffs[i] != 1) os << "*";
      os << "x";
      if (i > 1) os << "^" << i;
    }
    first = false;
  }
  if (first) os << "0";
  return os.str();
}
}  // namespace

std::string Field::format_element(std::uint32_t code) const {
  return format_poly(to_coeffs(code), e_ == 1);
}

std::string Field::format_modulus() const {
  return format_poly(modulus_, false);
}

FieldElement::FieldElement(FieldPtr field, std::uint32_t code)
    : field_(std::move(field)), code_(code) {
  if (!field_) throw std::invalid_argument("element without a field");
  if (code_ >= field_->q()) throw std::invalid_argument("element code out of range");
}

void FieldElement::check_same(const FieldElement& rhs) const {
  if (!field_ || !rhs.field_ || !field_->same_spec(*rhs.field_))
    throw std::invalid_argument("operands belong to different fields");
}

FieldElement FieldElement::operator+(const FieldElement& rhs) const {
  check_same(rhs);
  return {field_, field_->add(code_, rhs.code_)};
}

FieldElement FieldElement::operator-(const FieldElement& rhs) const {
  check_same(rhs);
  return {field_, field_->sub(code_, rhs.code_)};
}

FieldElement FieldElement::operator*(const FieldElement& rhs) const {
  check_same(rhs);
  return {field_, field_->mul(code_, rhs.code_)};
}

FieldElement FieldElement::operator/(const FieldElement& rhs) const {
  check_same(rhs);
  return {field_, field_->div(code_, rhs.code_)};
}

FieldElement FieldElement::operator-() const { return {field_, field_->neg(code_)}; }

FieldElement FieldElement::inverse() const { return {field_, field_->inv(code_)}; }

FieldElement FieldElement::pow(std::int64_t m) const {
  return {field_, field_->pow(code_, m)};
}

std::uint64_t FieldElement::order() const { return field_->element_order(code_); }

bool FieldElement::operator==(const FieldElement& rhs) const {
  if (!field_ || !rhs.field_) return field_ == rhs.field_ && code_ == rhs.code_;
  return field_->same_spec(*rhs.field_) && code_ == rhs.code_;
}

}  // namespace insdel
