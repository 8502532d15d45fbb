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
#include <vector>

#include "insdel/kernels/lcs_kernel.hpp"
#include "support/oracles.hpp"

using namespace insdel::kernels;

namespace {

std::vector<std::uint16_t> random_batch(std::size_t rows, std::size_t lb,
                                        std::uint32_t alphabet,
                                        std::mt19937_64& rng) {
  std::uniform_int_distribution<std::uint16_t> dist(
      0, static_cast<std::uint16_t>(alphabet - 1));
  std::vector<std::uint16_t> b(rows * lb);
  for (auto& x : b) x = dist(rng);
  return b;
}

std::vector<Impl> testable_impls() {
  std::vector<Impl> impls{Impl::kScalar};
  if (available(Impl::kAvx2)) impls.push_back(Impl::kAvx2);
  if (available(Impl::kNeon)) impls.push_back(Impl::kNeon);
  return impls;
}

}  // namespace

TEST_CASE("scalar kernel matches the subsequence-enumeration oracle") {
  std::mt19937_64 rng(123);
  for (int iter = 0; iter < 400; ++iter) {
    const std::size_t la = rng() % 9;  // oracle is exponential in |a|
    const std::size_t lb = rng() % 17;
    const std::uint32_t alphabet = 2 + rng() % 4;
    auto a16 = random_batch(1, la, alphabet, rng);
    auto b16 = random_batch(1, lb, alphabet, rng);
    std::uint8_t out = 0xff;
    lcs_batch_scalar(a16.data(), la, b16.data(), lb, 1, &out);

    std::vector<std::uint32_t> a32(a16.begin(), a16.end());
    std::vector<std::uint32_t> b32(b16.begin(), b16.end());
    CHECK(out == oracle::lcs_naive(a32, b32));
  }
}

TEST_CASE("SIMD kernels agree with the scalar reference") {
  std::mt19937_64 rng(456);
  const auto impls = testable_impls();
  REQUIRE(impls.size() >= 1);
  for (int iter = 0; iter < 300; ++iter) {
    const std::size_t la = rng() % 17;
    const std::size_t lb = rng() % 17;
    const std::size_t rows = rng() % 53;
    const std::uint32_t alphabet = (iter % 3 == 0) ? 2 : (iter % 3 == 1 ? 7 : 60000);
    auto a = random_batch(1, la, alphabet, rng);
    auto b = random_batch(rows, lb, alphabet, rng);

    std::vector<std::uint8_t> expect(rows, 0);
    lcs_batch_scalar(a.data(), la, b.data(), lb, rows, expect.data());
    for (Impl impl : impls) {
      std::vector<std::uint8_t> got(rows, 0xee);
      select(impl)(a.data(), la, b.data(), lb, rows, got.data());
      CHECK(got == expect);
    }
  }
}

TEST_CASE("kernels handle empty inputs") {
  std::vector<std::uint16_t> a{1, 2, 3};
  std::vector<std::uint16_t> b{1, 2, 3, 4};
  std::vector<std::uint8_t> out(4, 0xff);
  for (Impl impl : testable_impls()) {
    auto fn = select(impl);
    fn(a.data(), 0, b.data(), 1, 4, out.data());
    for (auto v : out) CHECK(v == 0);
    fn(a.data(), 3, b.data(), 0, 4, out.data());
    for (auto v : out) CHECK(v == 0);
    fn(a.data(), 3, b.data(), 4, 0, out.data());
  }
}

TEST_CASE("dispatch resolves and reports sensibly") {
  CHECK(available(Impl::kScalar));
  CHECK(select(Impl::kAuto) != nullptr);
  CHECK(name(Impl::kScalar) == std::string("scalar"));
  CHECK(impl_from_name("avx2") == Impl::kAvx2);
  CHECK_THROWS_AS(impl_from_name("sse9"), std::invalid_argument);

  const Impl previous = default_impl();
  set_default_impl(Impl::kScalar);
  CHECK(resolve(Impl::kAuto) == Impl::kScalar);
  CHECK(select(Impl::kAuto) == &lcs_batch_scalar);
  set_default_impl(previous);

  const Impl unavailable = available(Impl::kAvx2) ? Impl::kNeon : Impl::kAvx2;
  if (!available(unavailable))
    CHECK_THROWS_AS(select(unavailable), std::invalid_argument);
}

TEST_CASE("kernel output is reproducible") {
  std::mt19937_64 rng(789);
  auto a = random_batch(1, 8, 16, rng);
  auto b = random_batch(40, 8, 16, rng);
  std::vector<std::uint8_t> first(40), second(40);
  auto fn = select(Impl::kAuto);
  fn(a.data(), 8, b.data(), 8, 40, first.data());
  fn(a.data(), 8, b.data(), 8, 40, second.data());
  CHECK(first == second);
}
