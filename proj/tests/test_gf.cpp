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

#include "insdel/gf.hpp"

using namespace insdel;

TEST_CASE("modulus selection is deterministic and minimal") {
  auto f8 = make_field(2, 3);
  CHECK(f8->modulus() == std::vector<std::uint32_t>{1, 1, 0, 1});  // x^3+x+1
  auto again = make_field(2, 3);
  CHECK(f8->modulus() == again->modulus());
  CHECK(f8->same_spec(*again));

  auto f9 = make_field(3, 2);
  CHECK(f9->modulus() == std::vector<std::uint32_t>{1, 0, 1});  // x^2+1
}

TEST_CASE("prime fields degenerate cleanly") {
  auto f5 = make_field(5, 1);
  CHECK(f5->q() == 5);
  CHECK(f5->modulus() == std::vector<std::uint32_t>{0, 1});  // the polynomial x
  CHECK(f5->add(3, 4) == 2);
  CHECK(f5->mul(3, 4) == 2);
  CHECK(f5->neg(2) == 3);
}

TEST_CASE("construction rejects bad input") {
  CHECK_THROWS_AS(make_field(4, 2), std::invalid_argument);  // p not prime
  CHECK_THROWS_AS(make_field(1, 1), std::invalid_argument);
  CHECK_THROWS_AS(make_field(2, 0), std::invalid_argument);
  CHECK_THROWS_AS(make_field(2, 21), std::invalid_argument);  // above the q cap
  // (x+1)^2 over GF(3)
  CHECK_THROWS_AS(make_field(3, 2, {1, 2, 1}), std::invalid_argument);
  // non-monic
  CHECK_THROWS_AS(make_field(3, 2, {1, 1, 2}), std::invalid_argument);
  // wrong degree
  CHECK_THROWS_AS(make_field(3, 2, {1, 1}), std::invalid_argument);
  // coefficient out of range
  CHECK_THROWS_AS(make_field(3, 2, {5, 0, 1}), std::invalid_argument);
}

TEST_CASE("GF(8) multiplication reduces by the modulus") {
  auto f = make_field(2, 3);
  // x * x * x = x + 1 under x^3 + x + 1
  CHECK(f->mul(f->mul(2, 2), 2) == 3);
  CHECK(f->pow(2, 3) == 3);
}

TEST_CASE("identity laws hold everywhere") {
  for (auto [p, e] : {std::pair<std::uint32_t, std::uint32_t>{2, 3},
                      {3, 2},
                      {5, 2},
                      {7, 1}}) {
    auto f = make_field(p, e);
    for (std::uint32_t a = 0; a < f->q(); ++a) {
      CHECK(f->add(a, 0) == a);
      CHECK(f->mul(a, 1) == a);
      CHECK(f->add(a, f->neg(a)) == 0);
    }
  }
}

TEST_CASE("prime field inverses match known values") {
  auto f7 = make_field(7, 1);
  CHECK(f7->inv(3) == 5);
  CHECK(f7->div(1, 3) == 5);
  CHECK(f7->pow(3, -1) == 5);
  CHECK_THROWS_AS(f7->inv(0), std::invalid_argument);
  CHECK_THROWS_AS(f7->div(2, 0), std::invalid_argument);
}

TEST_CASE("element orders") {
  auto f7 = make_field(7, 1);
  CHECK(f7->element_order(1) == 1);
  CHECK(f7->element_order(2) == 3);  // 2, 4, 1
  CHECK_THROWS_AS(f7->element_order(0), std::invalid_argument);

  auto f8 = make_field(2, 3);
  CHECK(f8->element_order(2) == 7);  // theta = x
}

TEST_CASE("primitive elements come first in code order") {
  CHECK(make_field(2, 3)->primitive_element() == 2);  // x
  CHECK(make_field(2, 1)->primitive_element() == 1);  // q-1 = 1
  CHECK(make_field(7, 1)->primitive_element() == 3);
  auto f9 = make_field(3, 2);
  CHECK(f9->primitive_element() == 4);  // 1 + x under x^2 + 1
  CHECK(f9->element_order(4) == 8);
}

TEST_CASE("order of the primitive element is q-1 in every field") {
  for (auto [p, e] : {std::pair<std::uint32_t, std::uint32_t>{2, 3},
                      {3, 2},
                      {5, 2},
                      {2, 7},
                      {2, 13},
                      {3, 5}}) {
    auto f = make_field(p, e);
    CHECK(f->element_order(f->primitive_element()) == f->q() - 1);
  }
}

TEST_CASE("Fermat/Lagrange scan over whole small fields") {
  for (auto [p, e] : {std::pair<std::uint32_t, std::uint32_t>{2, 3},
                      {3, 2},
                      {5, 2},
                      {2, 7},
                      {2, 13}}) {
    auto f = make_field(p, e);
    for (std::uint32_t a = 1; a < f->q(); ++a) {
      REQUIRE(f->mul(a, f->inv(a)) == 1);
      REQUIRE(f->pow(a, static_cast<std::int64_t>(f->q()) - 1) == 1);
    }
  }
}

TEST_CASE("field axioms on random triples") {
  std::mt19937_64 rng(20260810);
  for (auto [p, e] : {std::pair<std::uint32_t, std::uint32_t>{2, 3},
                      {3, 2},
                      {5, 2},
                      {11, 1}}) {
    auto f = make_field(p, e);
    std::uniform_int_distribution<std::uint32_t> dist(
        0, static_cast<std::uint32_t>(f->q() - 1));
    for (int i = 0; i < 300; ++i) {
      const std::uint32_t a = dist(rng), b = dist(rng), c = dist(rng);
      CHECK(f->add(a, b) == f->add(b, a));
      CHECK(f->mul(a, b) == f->mul(b, a));
      CHECK(f->add(f->add(a, b), c) == f->add(a, f->add(b, c)));
      CHECK(f->mul(f->mul(a, b), c) == f->mul(a, f->mul(b, c)));
      CHECK(f->mul(a, f->add(b, c)) == f->add(f->mul(a, b), f->mul(a, c)));
      CHECK(f->sub(a, b) == f->add(a, f->neg(b)));
    }
  }
}

TEST_CASE("element enumeration is canonical") {
  auto f2 = make_field(2, 1);
  CHECK(f2->element_codes() == std::vector<std::uint32_t>{0, 1});

  auto f4 = make_field(2, 2);
  auto codes = f4->element_codes();
  CHECK(codes.size() == 4);
  CHECK(codes[0] == 0);
  CHECK(std::set<std::uint32_t>(codes.begin(), codes.end()).size() == 4);

  auto f8 = make_field(2, 3);
  auto codes8 = f8->element_codes();
  CHECK(std::set<std::uint32_t>(codes8.begin(), codes8.end()).size() == 8);
}

TEST_CASE("coefficient round trips") {
  auto f = make_field(3, 3);
  for (std::uint32_t a = 0; a < f->q(); ++a) {
    auto c = f->to_coeffs(a);
    CHECK(c.size() == 3);
    CHECK(f->from_coeffs(c) == a);
  }
  CHECK_THROWS_AS(f->from_coeffs({0, 1}), std::invalid_argument);
  CHECK_THROWS_AS(f->from_coeffs({3, 0, 0}), std::invalid_argument);
}

TEST_CASE("irreducible_moduli lists candidates in encoding order") {
  auto mods = irreducible_moduli(2, 3, 2);
  REQUIRE(mods.size() == 2);
  CHECK(mods[0] == std::vector<std::uint32_t>{1, 1, 0, 1});  // x^3+x+1
  CHECK(mods[1] == std::vector<std::uint32_t>{1, 0, 1, 1});  // x^3+x^2+1
  CHECK(mods[0] == make_field(2, 3)->modulus());
  for (const auto& m : mods) CHECK_NOTHROW(make_field(2, 3, m));
}

TEST_CASE("elements of different fields never mix") {
  auto mods = irreducible_moduli(2, 3, 2);
  auto fa = make_field(2, 3, mods[0]);
  auto fb = make_field(2, 3, mods[1]);
  FieldElement a(fa, 3), b(fb, 3);
  CHECK_THROWS_AS(a + b, std::invalid_argument);
  CHECK_THROWS_AS(a * b, std::invalid_argument);
  CHECK(a != b);

  FieldElement a2(fa, 3);
  CHECK(a == a2);
  CHECK((a + a2).code() == 0);
  CHECK((a * a2).code() == fa->mul(3, 3));
}

TEST_CASE("format helpers") {
  auto f8 = make_field(2, 3);
  CHECK(f8->format_modulus() == "x^3+x+1");
  CHECK(f8->format_element(3) == "x+1");
  CHECK(f8->format_element(0) == "0");
  CHECK(make_field(7, 1)->format_element(5) == "5");
}
