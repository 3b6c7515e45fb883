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

// Acceptance harness: one PASS/FAIL line per criterion, nonzero exit on any
// failure or exceeded time limit.

#include <chrono>
#include <cstdint>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "brandt/aut_triples.hpp"
#include "brandt/brandt_extension.hpp"
#include "brandt/corpus.hpp"
#include "brandt/oracle.hpp"
#include "support/naive_oracle.hpp"

namespace brandt {
namespace {

using Clock = std::chrono::steady_clock;
using ImageSet = std::set<std::vector<Element>>;

constexpr std::size_t kMaxOracleCarrier = 32;

struct Outcome {
  bool ok = true;
  std::string detail;
  void Require(bool cond, const std::string& what) {
    if (!cond && ok) {
      ok = false;
      detail = what;
    }
  }
};

std::uint64_t Factorial(std::size_t n) {
  std::uint64_t f = 1;
  for (std::size_t i = 2; i <= n; ++i) f *= i;
  return f;
}

std::string Where(const CorpusEntry& e, std::size_t lambda) {
  return e.name + " lambda=" + std::to_string(lambda);
}

Outcome MatrixUnits() {
  Outcome o;
  for (std::size_t lambda = 1; lambda <= 4; ++lambda) {
    const auto b = matrix_units(lambda);
    const Element one = b.nonzero_base().at(0);
    const auto autos = enumerate_automorphisms(b.carrier());
    o.Require(autos.size() == Factorial(lambda),
              "lambda=" + std::to_string(lambda) + " order " +
                  std::to_string(autos.size()));
    for (const auto& sigma : autos) {
      o.Require(sigma(b.zero()) == b.zero(), "zero not fixed");
      std::vector<std::size_t> phi(lambda);
      std::set<std::size_t> image;
      for (std::size_t a = 0; a < lambda; ++a) {
        const auto d = b.decode(sigma(b.encode(a, one, a)));
        o.Require(d.has_value() && d->row == d->col, "diagonal not preserved");
        if (!d) return o;
        phi[a] = d->row;
        image.insert(d->row);
      }
      o.Require(image.size() == lambda, "phi is not a permutation");
      for (std::size_t a = 0; a < lambda; ++a) {
        for (std::size_t c = 0; c < lambda; ++c) {
          o.Require(sigma(b.encode(a, one, c)) == b.encode(phi[a], one, phi[c]),
                    "automorphism is not induced by an index permutation");
        }
      }
    }
  }
  o.detail = o.ok ? "orders 1,2,6,24; all induced by index permutations" : o.detail;
  return o;
}

Outcome SetEquality() {
  Outcome o;
  std::size_t grid = 0, autos_total = 0;
  for (const auto& e : builtin_corpus()) {
    for (std::size_t lambda = 1; lambda <= 3; ++lambda) {
      const TripleGroup g(construct_brandt(e.monoid, lambda));
      if (g.extension().carrier().size() > kMaxOracleCarrier) continue;
      ++grid;
      const auto normalized = g.EnumerateNormalized();
      ImageSet structural;
      for (const auto& t : normalized) structural.insert(g.Realize(t).images());
      o.Require(structural.size() == normalized.size(),
                Where(e, lambda) + ": normalized triples not distinct");
      const auto oracle = enumerate_automorphisms(g.extension().carrier());
      ImageSet brute;
      for (const auto& sigma : oracle) brute.insert(sigma.images());
      o.Require(structural == brute, Where(e, lambda) + ": sets differ");
      for (const auto& sigma : oracle) {
        o.Require(g.Realize(decompose_automorphism(g, sigma)) == sigma,
                  Where(e, lambda) + ": realize(decompose) differs");
      }
      autos_total += oracle.size();
    }
  }
  if (o.ok) {
    o.detail = std::to_string(grid) + " grid points, " +
               std::to_string(autos_total) +
               " automorphisms; realize(decompose) exact on all";
  }
  return o;
}

Outcome GroupAxioms() {
  Outcome o;
  const TripleGroup g(construct_brandt(construct_cyclic_group_with_zero(3), 3));
  std::mt19937_64 rng(kDefaultSeed);
  const auto id = g.identity();
  for (int i = 0; i < 1000; ++i) {
    const auto a = g.RandomTriple(rng);
    const auto b = g.RandomTriple(rng);
    const auto c = g.RandomTriple(rng);
    o.Require(g.Compose(g.Compose(a, b), c) == g.Compose(a, g.Compose(b, c)),
              "associativity, trial " + std::to_string(i));
    o.Require(g.Compose(id, a) == a && g.Compose(a, id) == a,
              "identity law, trial " + std::to_string(i));
    const auto inv = g.Invert(a);
    o.Require(g.Compose(a, inv) == id && g.Compose(inv, a) == id,
              "inverse law, trial " + std::to_string(i));
  }
  if (o.ok) o.detail = "1000 triples over Z3^0, lambda=3";
  return o;
}

Outcome Homomorphism() {
  Outcome o;
  std::size_t pairs = 0;
  std::mt19937_64 rng(kDefaultSeed);
  for (const auto& e : builtin_corpus()) {
    for (std::size_t lambda = 1; lambda <= 3; ++lambda) {
      const TripleGroup g(construct_brandt(e.monoid, lambda));
      for (int i = 0; i < 500; ++i, ++pairs) {
        const auto t = g.RandomTriple(rng);
        const auto t2 = g.RandomTriple(rng);
        o.Require(g.Realize(g.Compose(t, t2)) == g.Realize(t).Then(g.Realize(t2)),
                  Where(e, lambda) + ": realization does not respect composition");
      }
    }
  }
  if (o.ok) o.detail = std::to_string(pairs) + " pairs";
  return o;
}

std::uint64_t CountUnits(const FiniteSemigroup& s) {
  const Element one = *s.identity();
  std::uint64_t n = 0;
  for (Element x = 0; x < s.size(); ++x) {
    for (Element y = 0; y < s.size(); ++y) {
      if (s.product(x, y) == one && s.product(y, x) == one) {
        ++n;
        break;
      }
    }
  }
  return n;
}

Outcome KernelQuotient() {
  Outcome o;
  const OracleLimits wide{.max_elements = 64};
  std::size_t grid = 0;
  for (const auto& e : builtin_corpus()) {
    const std::uint64_t units = CountUnits(e.monoid);
    const std::uint64_t aut_s = enumerate_automorphisms(e.monoid).size();
    for (std::size_t lambda = 1; lambda <= 3; ++lambda) {
      ++grid;
      const TripleGroup g(construct_brandt(e.monoid, lambda));
      const auto identity = SemigroupMap::Identity(g.extension().carrier());
      const auto kernel = g.Kernel();
      o.Require(kernel.size() == units, Where(e, lambda) + ": kernel size");
      for (const auto& t : kernel) {
        o.Require(g.Realize(t) == identity, Where(e, lambda) + ": kernel acts");
      }
      for (const auto& t : g.EnumerateAll()) {
        o.Require(g.InKernel(t) == (g.Realize(t) == identity),
                  Where(e, lambda) + ": membership disagrees with realization");
      }
      std::uint64_t formula = Factorial(lambda) * aut_s;
      for (std::size_t i = 1; i < lambda; ++i) formula *= units;
      const auto oracle =
          enumerate_automorphisms(g.extension().carrier(), wide).size();
      o.Require(formula == oracle, Where(e, lambda) + ": formula " +
                                       std::to_string(formula) + " vs oracle " +
                                       std::to_string(oracle));
    }
  }
  const auto z2 = construct_brandt(construct_cyclic_group_with_zero(2), 2);
  o.Require(enumerate_automorphisms(z2.carrier()).size() == 4, "B2(Z2^0) order");
  if (o.ok) o.detail = std::to_string(grid) + " grid points; B2(Z2^0) order 4";
  return o;
}

Outcome ZeroSemigroup() {
  Outcome o;
  const auto contrast = construct_cyclic_group_with_zero(2);
  const auto r = verify_zero_semigroup_example(3, 2, contrast);
  o.Require(r.zero_semigroup.carrier_size == 9, "carrier size");
  o.Require(r.zero_semigroup.bijections == 40320, "bijection count");
  o.Require(r.zero_semigroup.automorphisms == 40320,
            "automorphisms " + std::to_string(r.zero_semigroup.automorphisms));
  o.Require(r.monoid_contrast && r.monoid_contrast->non_automorphism,
            "no contrast witness");
  if (!o.ok) return o;
  const auto carrier = construct_brandt(contrast, 2).carrier();
  const auto& w = *r.monoid_contrast->non_automorphism;
  o.Require(w.at(0) == 0, "witness does not fix zero");
  o.Require(std::set<Element>(w.begin(), w.end()).size() == carrier.size(),
            "witness is not a bijection");
  o.Require(!testing::Multiplicative(carrier, carrier, w),
            "witness is multiplicative");
  if (o.ok) {
    o.detail = "40320/40320 for the zero semigroup; Z2^0 contrast has " +
               std::to_string(r.monoid_contrast->automorphisms) +
               " automorphisms and a non-automorphic witness";
  }
  return o;
}

Outcome RoundTrips() {
  Outcome o;
  std::vector<TripleGroup> grid;
  for (const auto& e : builtin_corpus()) {
    for (std::size_t lambda = 1; lambda <= 3; ++lambda) {
      grid.emplace_back(construct_brandt(e.monoid, lambda));
    }
  }
  std::mt19937_64 rng(kDefaultSeed);
  for (std::size_t i = 0; i < 1000; ++i) {
    const auto& g = grid[i % grid.size()];
    const auto t = g.RandomTriple(rng);
    o.Require(decompose_automorphism(g, g.Realize(t)) == g.Normalize(t),
              "decompose(realize) differs from normalize, trial " +
                  std::to_string(i));
  }
  if (o.ok) {
    o.detail = "1000 triples over " + std::to_string(grid.size()) +
               " grid points; realize(decompose) checked with the set equality";
  }
  return o;
}

Outcome Structure() {
  Outcome o;
  std::size_t carriers = 0;
  for (const auto& e : builtin_corpus()) {
    for (std::size_t lambda = 1; lambda <= 4; ++lambda) {
      const auto b = construct_brandt(e.monoid, lambda);
      const auto& c = b.carrier();
      ++carriers;
      o.Require(c.size() == lambda * lambda * (e.monoid.size() - 1) + 1,
                Where(e, lambda) + ": size law");
      o.Require(testing::NaiveAssociative(c), Where(e, lambda) + ": associativity");
      std::set<Element> diagonal;
      for (std::size_t a = 0; a < lambda; ++a) diagonal.insert(b.diagonal_identity(a));
      const auto maximal = maximal_idempotents(c);
      o.Require(std::set<Element>(maximal.begin(), maximal.end()) == diagonal,
                Where(e, lambda) + ": maximal idempotents");
    }
  }
  if (o.ok) o.detail = std::to_string(carriers) + " carriers, lambda 1..4";
  return o;
}

struct Criterion {
  const char* id;
  const char* title;
  double limit_s;
  std::function<Outcome()> run;
};

}  // namespace
}  // namespace brandt

int main() {
  using namespace brandt;
  const std::vector<Criterion> criteria = {
      {"C1", "matrix units", 10, MatrixUnits},
      {"C2", "triple image equals oracle set", 300, SetEquality},
      {"C3", "triple group axioms", 10, GroupAxioms},
      {"C4", "realization is a homomorphism", 60, Homomorphism},
      {"C5", "kernel and quotient order", 60, KernelQuotient},
      {"C6", "zero semigroup example", 60, ZeroSemigroup},
      {"C7", "decompose/realize round trips", 300, RoundTrips},
      {"C8", "structural invariants", 30, Structure},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    const auto start = Clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.ok = false;
      o.detail = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(Clock::now() - start).count();
    if (o.ok && secs >= c.limit_s) {
      o.ok = false;
      o.detail += "; exceeded time limit";
    }
    failed += o.ok ? 0 : 1;
    std::printf("[%s] %s %s: %s (%.2f s, limit %.0f s)\n", o.ok ? "PASS" : "FAIL",
                c.id, c.title, o.detail.c_str(), secs, c.limit_s);
  }
  std::printf("%zu/%zu criteria passed\n", criteria.size() - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
