// Copyright 2026 The brandt-aut Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <vector>

#include "brandt/brandt_extension.hpp"
#include "brandt/corpus.hpp"
#include "brandt/errors.hpp"
#include "catch_amalgamated.hpp"
#include "support/naive_oracle.hpp"

namespace brandt {

namespace {

ErrorKind KindOf(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("no error thrown");
  return ErrorKind::kParse;
}

std::vector<BrandtSemigroup> Extensions() {
  std::vector<BrandtSemigroup> out;
  for (const auto& e : builtin_corpus()) {
    for (std::size_t lambda = 1; lambda <= 4; ++lambda) {
      out.push_back(construct_brandt(e.monoid, lambda));
    }
  }
  return out;
}

}  // namespace

TEST_CASE("carrier sizes", "[brandt]") {
  const auto i0 = construct_cyclic_group_with_zero(1);
  const auto z20 = construct_cyclic_group_with_zero(2);
  CHECK(construct_brandt(i0, 2).carrier().size() == 5);
  CHECK(construct_brandt(z20, 2).carrier().size() == 9);
  CHECK(matrix_units(2).carrier().size() == 5);
  CHECK(matrix_units(3).carrier().size() == 10);
  CHECK(brandt_semigroup_of_group(construct_cyclic_group(2), 2).carrier().size() == 9);
  CHECK(brandt_semigroup_of_group(construct_cyclic_group(3), 2).carrier().size() == 13);
}

TEST_CASE("lambda = 1 gives back the base", "[brandt]") {
  const auto z20 = construct_cyclic_group_with_zero(2);
  CHECK(testing::NaiveIsomorphic(construct_brandt(z20, 1).carrier(), z20));
  const auto b1 = matrix_units(1).carrier();
  CHECK(b1.size() == 2);
  CHECK(testing::NaiveIsomorphic(b1, construct_cyclic_group_with_zero(1)));
}

TEST_CASE("matrix units", "[brandt]") {
  const auto b3 = matrix_units(3).carrier();
  CHECK(maximal_idempotents(b3).size() == 3);
  CHECK(b3.label(0) == "0");
  CHECK(b3.label(1) == "(0|0)");
  // brandt semigroup of the trivial group is B2 up to labels
  const auto g = brandt_semigroup_of_group(construct_trivial_semigroup(), 2);
  CHECK(g.carrier().flat_table() == matrix_units(2).carrier().flat_table());
}

TEST_CASE("construction preconditions", "[brandt][errors]") {
  CHECK(KindOf([] { construct_brandt(construct_zero_semigroup(3), 2); }) ==
        ErrorKind::kNotMonoidWithZero);
  CHECK(KindOf([] { construct_brandt(construct_cyclic_group(2), 2); }) ==
        ErrorKind::kNotMonoidWithZero);
  CHECK(KindOf([] { construct_brandt(construct_trivial_semigroup(), 2); }) ==
        ErrorKind::kNotMonoidWithZero);
  CHECK(KindOf([] { brandt_semigroup_of_group(construct_cyclic_group_with_zero(2), 2); }) ==
        ErrorKind::kNotAGroup);
  CHECK(KindOf([] { brandt_semigroup_of_group(construct_zero_semigroup(2), 2); }) ==
        ErrorKind::kNotAGroup);
  const auto z20 = construct_cyclic_group_with_zero(2);
  CHECK(KindOf([&] { construct_brandt(z20, 0); }) == ErrorKind::kOutOfRange);
  CHECK(KindOf([&] { construct_brandt(z20, 7); }) == ErrorKind::kOutOfRange);
  CHECK(construct_brandt(z20, 7, {.max_lambda = 7}).carrier().size() == 99);
}

TEST_CASE("codec", "[brandt]") {
  const auto b = construct_brandt(construct_cyclic_group_with_zero(1), 2);
  CHECK_FALSE(b.decode(0).has_value());
  const Element one = *b.base().identity();
  CHECK(*b.decode(1) == BrandtCoord{0, one, 0});
  CHECK(*b.decode(2) == BrandtCoord{0, one, 1});
  CHECK(*b.decode(3) == BrandtCoord{1, one, 0});
  CHECK(*b.decode(4) == BrandtCoord{1, one, 1});
  CHECK_THROWS_AS(b.decode(5), Error);
  CHECK_THROWS_AS(b.encode(2, one, 0), Error);
  CHECK_THROWS_AS(b.encode(0, *b.base().zero(), 0), Error);

  // 1 + row * |S*| * lambda + rank * lambda + col on Z3^0, lambda = 3
  const auto z30 = construct_brandt(construct_cyclic_group_with_zero(3), 3);
  CHECK(z30.encode(2, 1, 0) == 1 + 2 * 3 * 3 + 1 * 3 + 0);
  CHECK(z30.carrier().label(z30.encode(2, 1, 0)) == "(2|g|0)");

  for (const auto& ext : Extensions()) {
    for (Element x = 1; x < ext.carrier().size(); ++x) {
      CHECK(ext.encode(*ext.decode(x)) == x);
    }
  }
}

TEST_CASE("multiplication follows the Rees quotient rule", "[brandt][property]") {
  for (const auto& ext : Extensions()) {
    const auto& s = ext.base();
    const auto& c = ext.carrier();
    CHECK(c.size() == ext.lambda() * ext.lambda() * (s.size() - 1) + 1);
    CHECK(c.zero() == Element{0});
    for (Element x = 0; x < c.size(); ++x) {
      for (Element y = 0; y < c.size(); ++y) {
        const auto a = ext.decode(x);
        const auto b = ext.decode(y);
        Element expected = 0;
        if (a && b && a->col == b->row) {
          const Element m = s.product(a->middle, b->middle);
          if (m != *s.zero()) expected = ext.encode(a->row, m, b->col);
        }
        REQUIRE(c.product(x, y) == expected);
      }
    }
  }
}

TEST_CASE("structural invariants of the carrier", "[brandt][property]") {
  for (const auto& ext : Extensions()) {
    const auto& s = ext.base();
    const auto& c = ext.carrier();
    const Element one = *s.identity();
    const std::size_t n = ext.lambda();
    CHECK(testing::NaiveAssociative(c));

    // diagonal identities act as local units
    for (Element x = 1; x < c.size(); ++x) {
      const auto p = *ext.decode(x);
      CHECK(c.product(ext.diagonal_identity(p.row), x) == x);
      CHECK(c.product(x, ext.diagonal_identity(p.col)) == x);
    }

    std::vector<Element> expected_e{0};
    for (std::size_t a = 0; a < n; ++a) {
      for (Element e : idempotents(s)) {
        if (e != *s.zero()) expected_e.push_back(ext.encode(a, e, a));
      }
    }
    std::sort(expected_e.begin(), expected_e.end());
    CHECK(idempotents(c) == expected_e);

    std::vector<Element> expected_max;
    for (std::size_t a = 0; a < n; ++a) expected_max.push_back(ext.encode(a, one, a));
    CHECK(maximal_idempotents(c) == expected_max);

    // {0} u {(a, 1, b)} is a copy of B_lambda
    const auto units = matrix_units(n);
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) {
        for (std::size_t g = 0; g < n; ++g) {
          for (std::size_t d = 0; d < n; ++d) {
            const Element prod = c.product(ext.encode(a, one, b), ext.encode(g, one, d));
            const Element in_units = units.carrier().product(
                units.encode(a, 0, b), units.encode(g, 0, d));
            const Element mapped =
                in_units == 0 ? 0
                              : ext.encode(units.decode(in_units)->row, one,
                                           units.decode(in_units)->col);
            CHECK(prod == mapped);
          }
        }
      }
    }
  }
}

TEST_CASE("zero semigroup extension is a zero semigroup", "[brandt]") {
  const auto b = construct_brandt_with_zero(construct_zero_semigroup(3), 2);
  CHECK(b.carrier().size() == 9);
  for (Element x : b.carrier().flat_table()) CHECK(x == 0);
  CHECK_THROWS_AS(b.diagonal_identity(0), Error);
}

}  // namespace brandt
