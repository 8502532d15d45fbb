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

#include "insdel/lincode.hpp"

#include <algorithm>
#include <limits>
#include <string>

#include "insdel/parallel.hpp"

namespace insdel {

std::size_t hamming_distance(const Codeword& a, const Codeword& b) {
  if (!a.field || !b.field || !a.field->same_spec(*b.field))
    throw std::invalid_argument("operands belong to different fields");
  if (a.size() != b.size())
    throw std::invalid_argument("Hamming distance needs equal lengths");
  std::size_t d = 0;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a.symbols[i] != b.symbols[i]) ++d;
  return d;
}

std::size_t hamming_weight(const Codeword& a) {
  std::size_t w = 0;
  for (auto s : a.symbols)
    if (s != 0) ++w;
  return w;
}

namespace {

// Row-reduce a copy of the matrix over the field and return its rank.
std::size_t matrix_rank(const Field& f, std::vector<std::uint32_t> m,
                        std::size_t rows, std::size_t cols) {
  std::size_t rank = 0;
  for (std::size_t col = 0; col < cols && rank < rows; ++col) {
    std::size_t pivot = rank;
    while (pivot < rows && m[pivot * cols + col] == 0) ++pivot;
    if (pivot == rows) continue;
    if (pivot != rank)
      for (std::size_t j = 0; j < cols; ++j)
        std::swap(m[pivot * cols + j], m[rank * cols + j]);
    const std::uint32_t piv_inv = f.inv(m[rank * cols + col]);
    for (std::size_t j = 0; j < cols; ++j)
      m[rank * cols + j] = f.mul(m[rank * cols + j], piv_inv);
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == rank) continue;
      const std::uint32_t factor = m[r * cols + col];
      if (factor == 0) continue;
      for (std::size_t j = 0; j < cols; ++j)
        m[r * cols + j] =
            f.sub(m[r * cols + j], f.mul(factor, m[rank * cols + j]));
    }
    ++rank;
  }
  return rank;
}

}  // namespace

LinearCode::LinearCode(FieldPtr field, std::size_t n, std::size_t k,
                       std::vector<std::uint32_t> generator_row_major)
    : field_(std::move(field)), n_(n), k_(k), gen_(std::move(generator_row_major)) {
  if (!field_) throw std::invalid_argument("code without a field");
  if (k_ < 1 || n_ < 1 || k_ > n_)
    throw std::invalid_argument("code dimensions must satisfy 1 <= k <= n");
  if (gen_.size() != n_ * k_)
    throw std::invalid_argument("generator matrix has the wrong shape");
  for (auto s : gen_)
    if (s >= field_->q())
      throw std::invalid_argument("generator entry is not a field element");
  if (matrix_rank(*field_, gen_, k_, n_) != k_)
    throw std::invalid_argument("generator matrix must have rank k");
}

LinearCode LinearCode::reed_solomon(FieldPtr field,
                                    const std::vector<std::uint32_t>& locators,
                                    std::size_t k) {
  if (!field) throw std::invalid_argument("code without a field");
  const std::size_t n = locators.size();
  if (k < 1 || k >= n)
    throw std::invalid_argument("Reed-Solomon construction needs 1 <= k < n");
  for (auto a : locators)
    if (a >= field->q())
      throw std::invalid_argument("locator is not a field element");
  std::vector<std::uint32_t> sorted(locators);
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw std::invalid_argument("code locators must be pairwise distinct");

  std::vector<std::uint32_t> gen(k * n);
  for (std::size_t j = 0; j < n; ++j) gen[j] = 1;
  for (std::size_t t = 1; t < k; ++t)
    for (std::size_t j = 0; j < n; ++j)
      gen[t * n + j] = field->mul(gen[(t - 1) * n + j], locators[j]);
  LinearCode code(std::move(field), n, k, std::move(gen));
  code.rs_constructed_ = true;
  return code;
}

std::optional<std::uint64_t> LinearCode::codeword_count() const {
  std::uint64_t count = 1;
  const std::uint64_t q = field_->q();
  for (std::size_t i = 0; i < k_; ++i) {
    if (count > (std::uint64_t{1} << 63) / q) return std::nullopt;
    count *= q;
  }
  return count;
}

std::uint64_t LinearCode::enum_count_or_throw(const char* op) const {
  auto count = codeword_count();
  if (!count || *count > kEnumBudget)
    throw BudgetExceeded(std::string(op) +
                         ": q^k exceeds the 2^26 codeword enumeration budget");
  return *count;
}

Codeword LinearCode::encode(const std::vector<std::uint32_t>& message) const {
  if (message.size() != k_)
    throw std::invalid_argument("message length must equal k");
  std::vector<std::uint32_t> out(n_, 0);
  for (std::size_t t = 0; t < k_; ++t) {
    const std::uint32_t m = message[t];
    if (m >= field_->q())
      throw std::invalid_argument("message entry is not a field element");
    if (m == 0) continue;
    for (std::size_t j = 0; j < n_; ++j)
      out[j] = field_->add(out[j], field_->mul(m, gen_[t * n_ + j]));
  }
  return Codeword{field_, std::move(out)};
}

std::vector<std::uint32_t> LinearCode::message_of_rank(std::uint64_t rank) const {
  std::vector<std::uint32_t> m(k_);
  const std::uint64_t q = field_->q();
  for (std::size_t t = k_; t-- > 0;) {
    m[t] = static_cast<std::uint32_t>(rank % q);
    rank /= q;
  }
  return m;
}

int LinearCode::min_hamming_distance(unsigned threads) const {
  const std::uint64_t count = enum_count_or_throw("min_hamming_distance");
  const unsigned nthreads = resolve_threads(threads);
  auto bounds = uniform_bounds(1, count, nthreads);  // skip the zero codeword

  auto scan = [&](std::size_t, std::uint64_t lo, std::uint64_t hi) -> std::size_t {
    CodewordStream stream(*this);
    stream.seek(lo);
    constexpr std::size_t kBlock = 256;
    std::vector<std::uint32_t> buf(kBlock * n_);
    std::size_t best = n_ + 1;
    for (std::uint64_t r = lo; r < hi;) {
      const std::size_t take = static_cast<std::size_t>(
          std::min<std::uint64_t>(kBlock, hi - r));
      stream.fill_u32(buf.data(), take);
      for (std::size_t i = 0; i < take; ++i) {
        std::size_t w = 0;
        const std::uint32_t* row = buf.data() + i * n_;
        for (std::size_t j = 0; j < n_; ++j)
          if (row[j] != 0) ++w;
        if (w < best) best = w;
      }
      r += take;
    }
    return best;
  };
  auto partials = run_partitioned<std::size_t>(bounds, nthreads, scan);
  std::size_t best = n_ + 1;
  for (auto w : partials) best = std::min(best, w);
  return static_cast<int>(best);
}

bool LinearCode::is_mds(unsigned threads) const {
  return min_hamming_distance(threads) == static_cast<int>(n_ - k_ + 1);
}

void LinearCode::require_mds() const {
  if (rs_constructed_) return;
  auto count = codeword_count();
  if (count && *count <= kEnumBudget) {
    if (!is_mds()) throw std::invalid_argument("code is not MDS");
    return;
  }
  throw BudgetExceeded(
      "cannot verify the MDS property within the enumeration budget");
}

Codeword LinearCode::mds_support_codeword(const std::set<std::size_t>& zero_positions,
                                          std::size_t unit_position) const {
  if (k_ < 2 || n_ <= k_)
    throw std::invalid_argument("mds_support_codeword needs n > k >= 2");
  if (zero_positions.size() != k_ - 1)
    throw std::invalid_argument("need exactly k-1 zero positions");
  if (zero_positions.count(unit_position))
    throw std::invalid_argument("unit position must not be a zero position");
  for (auto i : zero_positions)
    if (i >= n_) throw std::invalid_argument("position out of range");
  if (unit_position >= n_) throw std::invalid_argument("position out of range");
  require_mds();

  // Solve m * G_S = pattern on the k selected columns. MDS makes any k
  // generator columns independent, so the system is uniquely solvable.
  std::vector<std::size_t> cols(zero_positions.begin(), zero_positions.end());
  cols.push_back(unit_position);
  std::sort(cols.begin(), cols.end());

  const Field& f = *field_;
  // augmented system: rows are equations (one per selected column)
  std::vector<std::uint32_t> aug(k_ * (k_ + 1), 0);
  for (std::size_t r = 0; r < k_; ++r) {
    const std::size_t col = cols[r];
    for (std::size_t t = 0; t < k_; ++t) aug[r * (k_ + 1) + t] = gen_[t * n_ + col];
    aug[r * (k_ + 1) + k_] = (col == unit_position) ? 1 : 0;
  }
  // Gaussian elimination
  for (std::size_t c = 0; c < k_; ++c) {
    std::size_t pivot = c;
    while (pivot < k_ && aug[pivot * (k_ + 1) + c] == 0) ++pivot;
    if (pivot == k_)
      throw std::logic_error(
          "singular support system on an MDS code: invariant violated");
    if (pivot != c)
      for (std::size_t j = 0; j <= k_; ++j)
        std::swap(aug[pivot * (k_ + 1) + j], aug[c * (k_ + 1) + j]);
    const std::uint32_t inv = f.inv(aug[c * (k_ + 1) + c]);
    for (std::size_t j = 0; j <= k_; ++j)
      aug[c * (k_ + 1) + j] = f.mul(aug[c * (k_ + 1) + j], inv);
    for (std::size_t r = 0; r < k_; ++r) {
      if (r == c) continue;
      const std::uint32_t factor = aug[r * (k_ + 1) + c];
      if (factor == 0) continue;
      for (std::size_t j = 0; j <= k_; ++j)
        aug[r * (k_ + 1) + j] =
            f.sub(aug[r * (k_ + 1) + j], f.mul(factor, aug[c * (k_ + 1) + j]));
    }
  }
  std::vector<std::uint32_t> message(k_);
  for (std::size_t t = 0; t < k_; ++t) message[t] = aug[t * (k_ + 1) + k_];

  Codeword w = encode(message);
  for (std::size_t j = 0; j < n_; ++j) {
    const bool should_be_zero = zero_positions.count(j) > 0;
    if (should_be_zero != (w.symbols[j] == 0))
      throw std::logic_error("support pattern violated: code is not MDS");
  }
  if (w.symbols[unit_position] != 1)
    throw std::logic_error("unit coordinate not 1 after solving");
  return w;
}

std::vector<Codeword> LinearCode::enumerate_codewords() const {
  const std::uint64_t count = enum_count_or_throw("enumerate_codewords");
  if (count * n_ > (std::uint64_t{1} << 26))
    throw BudgetExceeded("enumerate_codewords: materialization too large");
  std::vector<Codeword> out;
  out.reserve(static_cast<std::size_t>(count));
  CodewordStream stream(*this);
  std::vector<std::uint32_t> buf(n_);
  for (std::uint64_t r = 0; r < count; ++r) {
    stream.fill_u32(buf.data(), 1);
    out.push_back(Codeword{field_, buf});
  }
  return out;
}

bool LinearCode::operator==(const LinearCode& rhs) const {
  return field_ && rhs.field_ && field_->same_spec(*rhs.field_) && n_ == rhs.n_ &&
         k_ == rhs.k_ && gen_ == rhs.gen_;
}

CodewordStream::CodewordStream(const LinearCode& code)
    : code_(&code), q_(code.field()->q()), n_(code.n()), k_(code.k()) {
  const Field& f = *code.field();
  multiples_.resize(k_);
  for (std::size_t t = 0; t < k_; ++t) {
    multiples_[t].resize(q_ * n_);
    for (std::uint64_t c = 0; c < q_; ++c)
      for (std::size_t j = 0; j < n_; ++j)
        multiples_[t][c * n_ + j] =
            f.mul(static_cast<std::uint32_t>(c), code.at(t, j));
  }
  partials_.assign(k_ + 1, std::vector<std::uint32_t>(n_, 0));
  digits_.assign(k_, 0);
  recompute_partials(0);
}

void CodewordStream::seek(std::uint64_t rank) {
  for (std::size_t t = k_; t-- > 0;) {
    digits_[t] = static_cast<std::uint32_t>(rank % q_);
    rank /= q_;
  }
  recompute_partials(0);
}

void CodewordStream::recompute_partials(std::size_t from_level) {
  const Field& f = *code_->field();
  for (std::size_t t = from_level; t < k_; ++t) {
    const std::uint32_t* mult = multiples_[t].data() +
                                static_cast<std::size_t>(digits_[t]) * n_;
    for (std::size_t j = 0; j < n_; ++j)
      partials_[t + 1][j] = f.add(partials_[t][j], mult[j]);
  }
}

void CodewordStream::advance() {
  std::size_t t = k_;
  while (t > 0 && digits_[t - 1] == q_ - 1) {
    digits_[t - 1] = 0;
    --t;
  }
  if (t == 0) {  // wrapped past the last codeword; restart at rank 0
    recompute_partials(0);
    return;
  }
  ++digits_[t - 1];
  recompute_partials(t - 1);
}

void CodewordStream::fill_u16(std::uint16_t* rows, std::size_t count) {
  for (std::size_t i = 0; i < count; ++i) {
    const std::vector<std::uint32_t>& word = partials_[k_];
    for (std::size_t j = 0; j < n_; ++j)
      rows[i * n_ + j] = static_cast<std::uint16_t>(word[j]);
    advance();
  }
}

void CodewordStream::fill_u32(std::uint32_t* rows, std::size_t count) {
  for (std::size_t i = 0; i < count; ++i) {
    const std::vector<std::uint32_t>& word = partials_[k_];
    for (std::size_t j = 0; j < n_; ++j) rows[i * n_ + j] = word[j];
    advance();
  }
}

}  // namespace insdel
