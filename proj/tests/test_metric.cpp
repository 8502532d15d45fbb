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

#include <algorithm>
#include <numeric>
#include <random>

#include "insdel/metric.hpp"
#include "support/oracles.hpp"

using namespace insdel;

namespace {
Codeword word(FieldPtr f, std::vector<std::uint32_t> symbols) {
  return Codeword{std::move(f), std::move(symbols)};
}
}  // namespace

TEST_CASE("LCS basics") {
  auto f5 = make_field(5, 1);
  CHECK(lcs_length(word(f5, {1, 2, 3, 4}), word(f5, {1, 2, 3, 4})) == 4);
  CHECK(lcs_length(word(f5, {1, 1, 1}), word(f5, {2, 3, 2})) == 0);
  CHECK(lcs_length(word(f5, {1, 2, 1, 3}), word(f5, {2, 1, 3, 1})) == 3);
  CHECK(lcs_length(word(f5, {}), word(f5, {1, 2})) == 0);
}

TEST_CASE("insdel distance from the LCS identity") {
  auto f5 = make_field(5, 1);
  CHECK(insdel_distance(word(f5, {1, 2, 3}), word(f5, {1, 2, 3})) == 0);
  CHECK(insdel_distance(word(f5, {1, 2}), word(f5, {2, 3})) == 2);
  CHECK(insdel_distance(word(f5, {1, 2, 3, 4}), word(f5, {})) == 4);
}

TEST_CASE("mixed fields are rejected") {
  auto f5 = make_field(5, 1);
  auto f7 = make_field(7, 1);
  CHECK_THROWS_AS(lcs_length(word(f5, {1}), word(f7, {1})), std::invalid_argument);
  CHECK_THROWS_AS(insdel_distance(word(f5, {1}), word(f7, {1})),
                  std::invalid_argument);
}

TEST_CASE("metric axioms on random triples") {
  auto f5 = make_field(5, 1);
  std::mt19937_64 rng(2024);
  for (int i = 0; i < 2000; ++i) {
    auto a = word(f5, oracle::random_word(5, rng() % 9, rng));
    auto b = word(f5, oracle::random_word(5, rng() % 9, rng));
    auto c = word(f5, oracle::random_word(5, rng() % 9, rng));
    CHECK(insdel_distance(a, a) == 0);
    CHECK(insdel_distance(a, b) == insdel_distance(b, a));
    CHECK(insdel_distance(a, c) <= insdel_distance(a, b) + insdel_distance(b, c));
    if (a.symbols != b.symbols) CHECK(insdel_distance(a, b) > 0);
  }
}

TEST_CASE("insdel distance never exceeds twice the Hamming distance") {
  auto f7 = make_field(7, 1);
  std::mt19937_64 rng(77);
  for (int i = 0; i < 2000; ++i) {
    const std::size_t n = 1 + rng() % 10;
    auto a = word(f7, oracle::random_word(7, n, rng));
    auto b = word(f7, oracle::random_word(7, n, rng));
    CHECK(insdel_distance(a, b) <= 2 * static_cast<int>(hamming_distance(a, b)));
  }
}

TEST_CASE("LCS is invariant under alphabet bijections") {
  auto f8 = make_field(2, 3);
  std::mt19937_64 rng(88);
  std::vector<std::uint32_t> perm(8);
  for (int i = 0; i < 500; ++i) {
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    auto a = oracle::random_word(8, 1 + rng() % 8, rng);
    auto b = oracle::random_word(8, 1 + rng() % 8, rng);
    auto pa = a, pb = b;
    for (auto& x : pa) x = perm[x];
    for (auto& x : pb) x = perm[x];
    CHECK(lcs_length_u32(a, b) == lcs_length_u32(pa, pb));
  }
}

TEST_CASE("distance agrees with the BFS edit-script oracle on short words") {
  oracle::EditBfs bfs(2, 4);
  for (std::size_t src = 0; src < bfs.universe_size(); ++src) {
    auto a = bfs.seq_of(src);
    auto dist = bfs.distances_from(a);
    for (std::size_t dst = 0; dst < bfs.universe_size(); ++dst) {
      auto b = bfs.seq_of(dst);
      REQUIRE(dist[dst] == insdel_distance_u32(a, b));
    }
  }
}

TEST_CASE("exhaustive search on the repetition code") {
  auto f2 = make_field(2, 1);
  LinearCode rep3(f2, 3, 1, {1, 1, 1});
  auto report = min_insdel_exhaustive(rep3);
  CHECK(report.d_insdel == 6);  // single pair 000 vs 111 shares nothing
  CHECK(report.d_hamming == 3);
  CHECK(report.pairs_examined == 1);
  CHECK(report.witness_a.symbols == std::vector<std::uint32_t>{0, 0, 0});
  CHECK(report.witness_b.symbols == std::vector<std::uint32_t>{1, 1, 1});
  auto bounds = check_bounds(report);
  CHECK(bounds.singleton_ok);
  CHECK(bounds.meets_singleton);       // d = 2n - 2k + 2 exactly
  CHECK_FALSE(bounds.improved_applicable);  // k = 1
  CHECK_FALSE(bounds.violation());
}

TEST_CASE("exhaustive search on small [3,2] and [5,2] codes") {
  auto f2 = make_field(2, 1);
  LinearCode spc(f2, 3, 2, {1, 0, 1, 0, 1, 1});
  auto r1 = min_insdel_exhaustive(spc);
  CHECK(r1.d_insdel == 2);  // floor for distinct equal-length words
  CHECK(check_bounds(r1).meets_improved);

  auto code = LinearCode::reed_solomon(make_field(7, 1), {1, 2, 3, 4, 5}, 2);
  auto r2 = min_insdel_exhaustive(code);
  // witnesses (0,1,2,3,4) and (6,0,1,2,3) share (0,1,2,3), so d <= 2; the
  // floor gives d >= 2
  CHECK(r2.d_insdel == 2);
  CHECK(r2.d_hamming == 4);
  CHECK(insdel_distance(r2.witness_a, r2.witness_b) == r2.d_insdel);
}

TEST_CASE("exhaustive witnesses are codewords attaining the distance") {
  auto f9 = make_field(3, 2);
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 5; ++trial) {
    auto code = oracle::random_code(f9, 4 + rng() % 3, 2, rng);
    auto report = min_insdel_exhaustive(code);
    CHECK(insdel_distance(report.witness_a, report.witness_b) == report.d_insdel);
    CHECK(report.d_insdel % 2 == 0);
    auto all = code.enumerate_codewords();
    CHECK(std::count(all.begin(), all.end(), report.witness_a) == 1);
    CHECK(std::count(all.begin(), all.end(), report.witness_b) == 1);
    CHECK(report.d_insdel <= 2 * report.d_hamming);
  }
}

TEST_CASE("exhaustive reports do not depend on threads or kernel") {
  auto code = LinearCode::reed_solomon(make_field(2, 3), {1, 2, 3, 4, 5, 6}, 2);
  auto base = min_insdel_exhaustive(code, 1, kernels::Impl::kScalar);
  auto threaded = min_insdel_exhaustive(code, 4, kernels::Impl::kScalar);
  auto simd = min_insdel_exhaustive(code, 2, kernels::Impl::kAuto);
  CHECK(base.same_results(threaded));
  CHECK(base.same_results(simd));
}

TEST_CASE("pair budget failures are loud") {
  auto big = make_field(2, 14);
  auto code = LinearCode::reed_solomon(big, {1, 2, 3}, 2);
  CHECK_THROWS_AS(min_insdel_exhaustive(code), BudgetExceeded);

  auto huge = make_field(2, 17);
  LinearCode unary(huge, 2, 1, {1, 1});
  CHECK_THROWS_AS(min_insdel_exhaustive(unary), BudgetExceeded);
}

TEST_CASE("words beyond the kernel length cap fall back to the wide scan") {
  auto f2 = make_field(2, 1);
  LinearCode rep(f2, 18, 1, std::vector<std::uint32_t>(18, 1));
  auto report = min_insdel_exhaustive(rep);
  CHECK(report.d_insdel == 36);  // 0^18 vs 1^18 share nothing
  CHECK(report.pairs_examined == 1);

  // symbols wider than 16 bits take the same path
  auto f17 = make_field(2, 17);
  LinearCode pair17(f17, 2, 1, {1, 1});
  CHECK_THROWS_AS(min_insdel_exhaustive(pair17), BudgetExceeded);
}

TEST_CASE("witness pairs certify d <= 2n-2k without enumeration") {
  auto code = LinearCode::reed_solomon(make_field(7, 1), {1, 2, 3, 4, 5}, 2);
  auto w = witness_pair(code);
  CHECK(w.lcs_bound >= 2);
  CHECK(w.a.symbols == std::vector<std::uint32_t>{0, 1, 2, 3, 4});
  CHECK(w.b.symbols == std::vector<std::uint32_t>{6, 0, 1, 2, 3});
  CHECK(insdel_distance(w.a, w.b) <= 6);

  auto big = LinearCode::reed_solomon(make_field(2, 3), {1, 2, 3, 4, 5, 6, 7}, 3);
  auto w2 = witness_pair(big);
  CHECK(w2.lcs_bound >= 3);
  CHECK(insdel_distance(w2.a, w2.b) <= 2 * 7 - 2 * 3);

  auto f2 = make_field(2, 1);
  LinearCode rep3(f2, 3, 1, {1, 1, 1});
  CHECK_THROWS_AS(witness_pair(rep3), std::invalid_argument);  // k < 2
}

TEST_CASE("witness report carries the certificate") {
  auto code = LinearCode::reed_solomon(make_field(2, 3), {1, 2, 3, 4, 5, 6, 7}, 3);
  auto report = witness_report(code);
  CHECK(report.method == Method::kWitnessOnly);
  CHECK(report.d_insdel <= report.bound_improved);
  CHECK(report.d_hamming == 5);
  CHECK(report.pairs_examined == 1);
  CHECK(insdel_distance(report.witness_a, report.witness_b) == report.d_insdel);
  CHECK_FALSE(check_bounds(report).violation());
}

TEST_CASE("check_bounds flags impossible reports") {
  auto code = LinearCode::reed_solomon(make_field(7, 1), {1, 2, 3, 4, 5}, 2);
  auto report = min_insdel_exhaustive(code);
  report.d_insdel = report.bound_singleton + 2;  // cannot happen
  auto v = check_bounds(report);
  CHECK_FALSE(v.singleton_ok);
  CHECK(v.violation());
}
