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

#include <doctest.h>

#include <random>
#include <set>

#include "insdel/lincode.hpp"
#include "support/oracles.hpp"

using namespace insdel;

namespace {
LinearCode rs52() {
  return LinearCode::reed_solomon(make_field(7, 1), {1, 2, 3, 4, 5}, 2);
}
}  // namespace

TEST_CASE("Reed-Solomon construction and encoding") {
  auto code = rs52();
  CHECK(code.n() == 5);
  CHECK(code.k() == 2);
  CHECK(code.rs_constructed());
  CHECK(code.row(0)[0] == 1);
  CHECK(code.row(1)[3] == 4);

  CHECK(code.encode({0, 0}).symbols == std::vector<std::uint32_t>{0, 0, 0, 0, 0});
  CHECK(code.encode({1, 0}).symbols == std::vector<std::uint32_t>{1, 1, 1, 1, 1});
  // f(x) = 1 + x evaluated at 1..5
  CHECK(code.encode({1, 1}).symbols == std::vector<std::uint32_t>{2, 3, 4, 5, 6});
  CHECK_THROWS_AS(code.encode({1}), std::invalid_argument);
}

TEST_CASE("Reed-Solomon minimum distance meets n-k+1") {
  CHECK(rs52().min_hamming_distance() == 4);
  CHECK(rs52().is_mds());

  auto f8 = make_field(2, 3);
  auto code = LinearCode::reed_solomon(f8, {1, 2, 3, 4, 5, 6, 7}, 3);
  CHECK(code.min_hamming_distance() == 5);
  CHECK(code.is_mds());
}

TEST_CASE("Reed-Solomon rejects bad parameters") {
  auto f7 = make_field(7, 1);
  CHECK_THROWS_AS(LinearCode::reed_solomon(f7, {1, 2, 3}, 3), std::invalid_argument);
  CHECK_THROWS_AS(LinearCode::reed_solomon(f7, {1, 2, 2}, 2), std::invalid_argument);
  CHECK_THROWS_AS(LinearCode::reed_solomon(f7, {1, 9}, 1), std::invalid_argument);
}

TEST_CASE("generator rank is validated") {
  auto f2 = make_field(2, 1);
  CHECK_THROWS_AS(LinearCode(f2, 2, 2, {1, 1, 1, 1}), std::invalid_argument);
  CHECK_THROWS_AS(LinearCode(f2, 3, 1, {0, 0, 0}), std::invalid_argument);
  CHECK_NOTHROW(LinearCode(f2, 2, 1, {1, 1}));
}

TEST_CASE("hand-built binary codes") {
  auto f2 = make_field(2, 1);
  LinearCode rep3(f2, 3, 1, {1, 1, 1});
  CHECK(rep3.min_hamming_distance() == 3);

  LinearCode weak(f2, 4, 2, {1, 0, 0, 0, 0, 1, 0, 0});
  CHECK(weak.min_hamming_distance() == 1);
  CHECK_FALSE(weak.is_mds());

  LinearCode spc(f2, 3, 2, {1, 0, 1, 0, 1, 1});
  CHECK(spc.min_hamming_distance() == 2);
  CHECK(spc.is_mds());
}

TEST_CASE("codeword enumeration is rank-ordered and duplicate-free") {
  auto f2 = make_field(2, 1);
  LinearCode tiny(f2, 2, 1, {1, 1});
  auto words = tiny.enumerate_codewords();
  REQUIRE(words.size() == 2);
  CHECK(words[0].symbols == std::vector<std::uint32_t>{0, 0});
  CHECK(words[1].symbols == std::vector<std::uint32_t>{1, 1});

  auto code = rs52();
  auto all = code.enumerate_codewords();
  REQUIRE(all.size() == 49);
  CHECK(hamming_weight(all[0]) == 0);
  std::set<std::vector<std::uint32_t>> dedup;
  for (const auto& w : all) dedup.insert(w.symbols);
  CHECK(dedup.size() == 49);
}

TEST_CASE("stream matches encode at random ranks") {
  auto code = rs52();
  std::mt19937_64 rng(7);
  CodewordStream stream(code);
  std::vector<std::uint32_t> buf(code.n());
  for (int i = 0; i < 20; ++i) {
    const std::uint64_t rank = rng() % 49;
    stream.seek(rank);
    stream.fill_u32(buf.data(), 1);
    CHECK(buf == code.encode(code.message_of_rank(rank)).symbols);
  }
}

TEST_CASE("support codewords solve to the exact pattern") {
  auto code = rs52();

  auto a = code.mds_support_codeword({0}, 1);
  CHECK(a.symbols == std::vector<std::uint32_t>{0, 1, 2, 3, 4});
  CHECK(hamming_weight(a) == 4);  // n - k + 1

  auto b = code.mds_support_codeword({1}, 2);
  CHECK(b.symbols == std::vector<std::uint32_t>{6, 0, 1, 2, 3});

  CHECK_THROWS_AS(code.mds_support_codeword({0, 1}, 2), std::invalid_argument);
  CHECK_THROWS_AS(code.mds_support_codeword({1}, 1), std::invalid_argument);
  CHECK_THROWS_AS(code.mds_support_codeword({9}, 1), std::invalid_argument);
}

TEST_CASE("support codewords reject non-MDS codes") {
  auto f2 = make_field(2, 1);
  LinearCode weak(f2, 4, 2, {1, 0, 0, 0, 0, 1, 0, 0});
  CHECK_THROWS_AS(weak.mds_support_codeword({0}, 1), std::invalid_argument);
}

TEST_CASE("support codeword shape on every index choice of a small MDS code") {
  auto code = rs52();
  for (std::size_t z = 0; z < code.n(); ++z) {
    for (std::size_t u = 0; u < code.n(); ++u) {
      if (u == z) continue;
      auto w = code.mds_support_codeword({z}, u);
      CHECK(w.symbols[z] == 0);
      CHECK(w.symbols[u] == 1);
      CHECK(hamming_weight(w) == code.n() - code.k() + 1);
    }
  }
}

TEST_CASE("Hamming Singleton bound on random codes") {
  std::mt19937_64 rng(99);
  for (auto [p, e] : {std::pair<std::uint32_t, std::uint32_t>{2, 1},
                      {3, 1},
                      {2, 2},
                      {5, 1},
                      {3, 2}}) {
    auto f = make_field(p, e);
    for (int trial = 0; trial < 20; ++trial) {
      const std::size_t n = 2 + rng() % 6;
      const std::size_t k = 1 + rng() % n;
      auto code = oracle::random_code(f, n, k, rng);
      CHECK(code.min_hamming_distance() <=
            static_cast<int>(code.n() - code.k() + 1));
    }
  }
}

TEST_CASE("enumeration budget failures are loud") {
  auto big = make_field(2, 14);
  auto code = LinearCode::reed_solomon(big, {1, 2, 3}, 2);  // q^k = 2^28
  CHECK_THROWS_AS(code.min_hamming_distance(), BudgetExceeded);
  CHECK_THROWS_AS(code.enumerate_codewords(), BudgetExceeded);
}

TEST_CASE("parallel Hamming scans agree with single-threaded ones") {
  auto f8 = make_field(2, 3);
  auto code = LinearCode::reed_solomon(f8, {1, 2, 3, 4, 5, 6, 7}, 3);
  CHECK(code.min_hamming_distance(1) == code.min_hamming_distance(4));
}
