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

#include <random>
#include <set>
#include <vector>

#include "brandt/aut_triples.hpp"
#include "brandt/corpus.hpp"
#include "brandt/errors.hpp"
#include "catch_amalgamated.hpp"
#include "support/naive_oracle.hpp"

namespace brandt {

namespace {

TripleGroup Over(const FiniteSemigroup& s, std::size_t lambda) {
  return TripleGroup(construct_brandt(s, lambda));
}

AutTriple Make(const TripleGroup& g, std::vector<std::size_t> phi,
               std::vector<Element> h, std::vector<Element> u) {
  return {std::move(phi), SemigroupMap(g.base(), g.base(), std::move(h)),
          std::move(u)};
}

bool IsIdentity(const SemigroupMap& m) {
  return m == SemigroupMap::Identity(m.source());
}

}  // namespace

TEST_CASE("identity triple realizes the identity", "[triples]") {
  for (const auto& e : builtin_corpus()) {
    const auto g = Over(e.monoid, 2);
    CHECK(IsIdentity(g.Realize(g.identity())));
  }
}

TEST_CASE("realization on concrete triples", "[triples]") {
  SECTION("swap on B2") {
    const TripleGroup g(matrix_units(2));
    const auto& b = g.extension();
    const auto t = Make(g, {1, 0}, {0, 1}, {0, 0});
    const auto sigma = g.Realize(t);
    CHECK(sigma(b.encode(0, 0, 1)) == b.encode(1, 0, 0));
    CHECK(sigma(b.encode(0, 0, 0)) == b.encode(1, 0, 1));
    CHECK(b.carrier().label(sigma(*b.carrier().find_label("(0|0)"))) == "(1|1)");
  }
  SECTION("unit twist over Z2") {
    const TripleGroup g(brandt_semigroup_of_group(construct_cyclic_group(2), 2));
    const auto& b = g.extension();
    // base labels 1, g, 0
    const auto t = Make(g, {0, 1}, {0, 1, 2}, {1, 0});
    const auto sigma = g.Realize(t);
    CHECK(sigma(b.encode(0, 0, 1)) == b.encode(0, 1, 1));
    CHECK(b.carrier().label(sigma(b.encode(0, 0, 1))) == "(0|g|1)");
    CHECK(sigma.is_automorphism());
  }
}

TEST_CASE("composition", "[triples]") {
  const auto z20 = construct_cyclic_group_with_zero(2);
  const auto g = Over(z20, 2);
  const auto swap = Make(g, {1, 0}, {0, 1, 2}, {0, 0});
  CHECK(g.Compose(swap, swap) == g.identity());
  CHECK(g.Compose(swap, g.identity()) == swap);
  CHECK(g.Compose(g.identity(), swap) == swap);

  const auto g3 = Over(construct_cyclic_group_with_zero(3), 3);
  std::mt19937_64 rng(7);
  for (int i = 0; i < 200; ++i) {
    const auto a = g3.RandomTriple(rng);
    const auto b = g3.RandomTriple(rng);
    const auto c = g3.RandomTriple(rng);
    CHECK(g3.Compose(g3.Compose(a, b), c) == g3.Compose(a, g3.Compose(b, c)));
  }
}

TEST_CASE("composition is left to right with right actions", "[triples]") {
  // Z3^0 = {1, g, g^2, 0}; index k < 3 is g^k.
  const auto g = Over(construct_cyclic_group_with_zero(3), 2);
  const auto& b = g.extension();
  const auto t = Make(g, {1, 0}, {0, 2, 1, 3}, {1, 0});
  const auto t2 = Make(g, {0, 1}, {0, 1, 2, 3}, {0, 1});

  const auto tt2 = g.Compose(t, t2);
  CHECK(tt2 == Make(g, {1, 0}, {0, 2, 1, 3}, {2, 0}));
  CHECK(g.Compose(t2, t) == Make(g, {1, 0}, {0, 2, 1, 3}, {1, 2}));

  // Apply t, then t2, by hand in exponent arithmetic.
  auto apply = [](const std::vector<std::size_t>& phi,
                  const std::vector<int>& h, const std::vector<int>& u,
                  std::size_t a, int k, std::size_t c) {
    const int mid = ((u[a] + h[k] - u[c]) % 3 + 3) % 3;
    return std::tuple{phi[a], mid, phi[c]};
  };
  const auto sigma = g.Realize(tt2);
  for (std::size_t a = 0; a < 2; ++a) {
    for (int k = 0; k < 3; ++k) {
      for (std::size_t c = 0; c < 2; ++c) {
        const auto [a1, k1, c1] = apply({1, 0}, {0, 2, 1}, {1, 0}, a, k, c);
        const auto [a2, k2, c2] = apply({0, 1}, {0, 1, 2}, {0, 1}, a1, k1, c1);
        CHECK(sigma(b.encode(a, static_cast<Element>(k), c)) ==
              b.encode(a2, static_cast<Element>(k2), c2));
      }
    }
  }
}

TEST_CASE("inverses", "[triples]") {
  const auto i0 = Over(construct_cyclic_group_with_zero(1), 2);
  CHECK(i0.Invert(i0.identity()) == i0.identity());
  const auto swap = Make(i0, {1, 0}, {0, 1}, {0, 0});
  CHECK(i0.Invert(swap) == swap);

  const auto z2 = Over(construct_cyclic_group_with_zero(2), 2);
  const auto twist = Make(z2, {0, 1}, {0, 1, 2}, {1, 0});
  CHECK(z2.Invert(twist) == twist);

  for (const auto& e : builtin_corpus()) {
    const auto g = Over(e.monoid, 3);
    std::mt19937_64 rng(11);
    for (int i = 0; i < 50; ++i) {
      const auto t = g.RandomTriple(rng);
      CHECK(g.Compose(t, g.Invert(t)) == g.identity());
      CHECK(g.Compose(g.Invert(t), t) == g.identity());
    }
  }
}

TEST_CASE("kernel", "[triples]") {
  const auto z2 = Over(construct_cyclic_group_with_zero(2), 2);
  CHECK(z2.InKernel(z2.identity()));
  const auto kernel = z2.Kernel();
  REQUIRE(kernel.size() == 2);
  CHECK(kernel[0] == Make(z2, {0, 1}, {0, 1, 2}, {0, 0}));
  CHECK(kernel[1] == Make(z2, {0, 1}, {0, 1, 2}, {1, 1}));
  CHECK_FALSE(z2.InKernel(Make(z2, {0, 1}, {0, 1, 2}, {1, 0})));

  for (std::size_t lambda = 1; lambda <= 4; ++lambda) {
    CHECK(Over(construct_cyclic_group_with_zero(1), lambda).Kernel().size() == 1);
  }
  for (const auto& e : builtin_corpus()) {
    const auto g = Over(e.monoid, 2);
    CHECK(g.Kernel().size() == unit_group(e.monoid).order());
    for (const auto& k : g.Kernel()) CHECK(IsIdentity(g.Realize(k)));
    for (const auto& t : g.EnumerateAll()) {
      CHECK(g.InKernel(t) == IsIdentity(g.Realize(t)));
    }
  }
}

TEST_CASE("normalization", "[triples]") {
  const auto z2 = Over(construct_cyclic_group_with_zero(2), 2);
  CHECK(z2.Normalize(z2.identity()) == z2.identity());
  CHECK(z2.Normalize(Make(z2, {0, 1}, {0, 1, 2}, {1, 1})) == z2.identity());

  for (const auto& e : builtin_corpus()) {
    const auto g = Over(e.monoid, 2);
    std::set<std::vector<Element>> seen;
    for (const auto& t : g.EnumerateAll()) {
      const auto n = g.Normalize(t);
      CHECK(g.IsNormalized(n));
      CHECK(g.Normalize(n) == n);
      CHECK(g.Realize(n) == g.Realize(t));
    }
    for (const auto& t : g.EnumerateNormalized()) {
      CHECK(seen.insert(g.Realize(t).images()).second);
    }
    CHECK(seen.size() == g.AutGroupOrder());
  }
}

TEST_CASE("triple validation", "[triples][errors]") {
  const auto g = Over(construct_cyclic_group_with_zero(2), 2);
  auto kind = [&](const AutTriple& t) {
    try {
      g.Validate(t);
    } catch (const Error& e) {
      return e.kind();
    }
    return ErrorKind::kParse;
  };
  CHECK(kind(Make(g, {0, 0}, {0, 1, 2}, {0, 0})) == ErrorKind::kInvalidTriple);
  CHECK(kind(Make(g, {0, 1}, {1, 0, 2}, {0, 0})) == ErrorKind::kInvalidTriple);
  CHECK(kind(Make(g, {0, 1}, {0, 1, 2}, {0, 2})) == ErrorKind::kInvalidTriple);
  CHECK(kind(Make(g, {0, 1, 2}, {0, 1, 2}, {0, 0, 0})) == ErrorKind::kMismatchedBase);

  const auto g3 = Over(construct_cyclic_group_with_zero(2), 3);
  CHECK_THROWS_AS(g.Compose(g.identity(), g3.identity()), Error);
  CHECK_THROWS_AS(TripleGroup(construct_brandt_with_zero(construct_zero_semigroup(3), 2)),
                  Error);
}

TEST_CASE("base automorphisms fix 0 and 1 and preserve units", "[triples]") {
  for (const auto& e : builtin_corpus()) {
    const auto g = Over(e.monoid, 1);
    const auto& s = e.monoid;
    const auto naive = testing::NaiveAutomorphisms(s);
    CHECK(g.base_automorphisms().size() == naive.size());
    for (const auto& h : g.base_automorphisms()) {
      CHECK(naive.contains(h.images()));
      CHECK(h(*s.zero()) == *s.zero());
      CHECK(h(*s.identity()) == *s.identity());
      for (Element u : g.units().members()) CHECK(g.units().contains(h(u)));
    }
  }
}

TEST_CASE("automorphism group orders", "[triples]") {
  const std::uint64_t factorials[] = {1, 2, 6, 24};
  for (std::size_t lambda = 1; lambda <= 4; ++lambda) {
    CHECK(aut_group_order(matrix_units(lambda)) == factorials[lambda - 1]);
  }
  CHECK(aut_group_order(brandt_semigroup_of_group(construct_cyclic_group(2), 2)) == 4);
  CHECK(Over(construct_cyclic_group_with_zero(2), 2).TripleGroupOrder() == 8);
  for (const auto& e : builtin_corpus()) {
    CHECK(aut_group_order(construct_brandt(e.monoid, 1)) ==
          testing::NaiveAutomorphisms(e.monoid).size());
  }
  // small carriers against the naive permutation scan
  for (const auto& e : builtin_corpus()) {
    const auto b = construct_brandt(e.monoid, 2);
    if (b.carrier().size() > 10) continue;
    CHECK(aut_group_order(b) == testing::NaiveAutomorphisms(b.carrier()).size());
  }
}

TEST_CASE("enumeration respects the budget", "[triples][errors]") {
  const TripleGroup g(construct_brandt(construct_cyclic_group_with_zero(4), 4),
                      {.max_triples = 1000});
  try {
    g.EnumerateAll();
    FAIL("expected BudgetExceeded");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::kBudgetExceeded);
  }
  CHECK(g.AutGroupOrder() == 24 * 2 * 64);
}

TEST_CASE("uniform_index is reproducible", "[triples]") {
  std::mt19937_64 a(3), b(3);
  for (int i = 0; i < 100; ++i) {
    const auto x = uniform_index(a, 7);
    CHECK(x < 7);
    CHECK(x == uniform_index(b, 7));
  }
}

}  // namespace brandt
