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

#ifndef BRANDT_ORACLE_HPP_
#define BRANDT_ORACLE_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "brandt/aut_triples.hpp"
#include "brandt/brandt_extension.hpp"
#include "brandt/semigroup.hpp"
#include "brandt/semigroup_map.hpp"

namespace brandt {

inline constexpr std::uint64_t kDefaultSeed = 20160817;

struct OracleLimits {
  std::size_t max_elements = 32;
  std::uint64_t max_automorphisms = 2000000;
  // Cap on (n-1)! for exhaustive zero-fixing bijection scans.
  std::uint64_t max_bijections = 1000000;
  // Beyond this many triples, quotient checks sample instead of enumerate.
  std::uint64_t max_triples = 1000000;
};

// Every automorphism of T, found by backtracking over element images.
//
// Zero and identity are pinned. Images must agree on a table-derived
// signature (idempotency, maximality, index and period, annihilator counts).
// Each assignment propagates: once x and y are both mapped, the image of
// xy is forced to (x)s(y)s, which either extends the partial map or refutes
// it. Maximal idempotents are branched on first, then the other idempotents,
// then everything else in index order. This search uses only the Cayley
// table. Results are sorted by image array. Throws BudgetExceeded when
// |T| > max_elements or more than max_automorphisms are found.
std::vector<SemigroupMap> enumerate_automorphisms(
    const FiniteSemigroup& t, const OracleLimits& limits = {});

// Some isomorphism a -> b, by the same search.
std::optional<SemigroupMap> find_isomorphism(const FiniteSemigroup& a,
                                             const FiniteSemigroup& b);

// Reads a normalized triple off an automorphism of the carrier, pivoting on
// row 0: phi and u come from the images of (beta, 1_S, 0), h from the
// images of (0, s, 0). The result is checked to realize sigma exactly.
// Throws NotAutomorphism when sigma is not an automorphism of the carrier
// and DecompositionMismatch when any step disagrees with the triple form.
AutTriple decompose_automorphism(const TripleGroup& group,
                                 const SemigroupMap& sigma);

// Whether sigma maps the maximal idempotents of the carrier onto themselves.
bool permutes_maximal_idempotents(const FiniteSemigroup& carrier,
                                  const SemigroupMap& sigma);

struct ReportSubject {
  std::string base;
  std::size_t lambda = 0;
  std::string kind;
};

struct MapWitness {
  std::string side;  // which set the map was found in
  std::vector<Element> images;
};

struct AutGroupReport {
  std::string check;
  ReportSubject subject;
  std::uint64_t oracle_order = 0;
  std::uint64_t structural_order = 0;
  bool match = false;
  std::uint64_t kernel_size = 0;
  std::uint64_t triple_group_order = 0;
  std::optional<MapWitness> witness;
  std::vector<std::string> failures;
  std::uint64_t seed = kDefaultSeed;
  double elapsed_ms = 0.0;

  bool passed() const { return match && failures.empty(); }
};

// Realized normalized triples versus the brute-force automorphism set, as
// sets of maps; also decomposes every oracle automorphism and checks the
// round trip and that maximal idempotents are permuted.
AutGroupReport verify_triple_parametrization(const FiniteSemigroup& s,
                                             std::size_t lambda,
                                             const OracleLimits& limits = {});

// Aut(B_lambda) has order lambda! and every automorphism is
// (a, b) -> ((a)phi, (b)phi).
AutGroupReport verify_matrix_units(std::size_t lambda,
                                   const OracleLimits& limits = {});

struct ZeroFixingReport {
  std::string subject;
  std::size_t carrier_size = 0;
  std::uint64_t bijections = 0;
  std::uint64_t automorphisms = 0;
  std::optional<std::vector<Element>> non_automorphism;
  double elapsed_ms = 0.0;
};

// Tests every bijection of the carrier fixing its zero.
ZeroFixingReport count_zero_fixing_automorphisms(
    const FiniteSemigroup& carrier, const OracleLimits& limits = {});

struct ZeroSemigroupExampleReport {
  std::size_t k = 0;
  std::size_t lambda = 0;
  std::uint64_t expected = 0;  // (lambda^2 (k-1))!
  ZeroFixingReport zero_semigroup;
  std::optional<ZeroFixingReport> monoid_contrast;

  bool passed() const;
};

// The extension of the k-element zero semigroup: every zero-fixing bijection
// is an automorphism. When `contrast` is given (a monoid with zero), its
// extension with the same lambda must have some zero-fixing bijection that
// is not an automorphism.
ZeroSemigroupExampleReport verify_zero_semigroup_example(
    std::size_t k, std::size_t lambda,
    const std::optional<FiniteSemigroup>& contrast = std::nullopt,
    const OracleLimits& limits = {});

struct CompositionReport {
  ReportSubject subject;
  std::size_t trials = 0;
  std::size_t failures = 0;
  std::uint64_t seed = kDefaultSeed;

  bool passed() const { return failures == 0; }
};

// Realizing a composite equals composing realizations, on random pairs.
CompositionReport verify_composition_law(const TripleGroup& group,
                                         std::size_t trials,
                                         std::uint64_t seed = kDefaultSeed);

// ker N must be exact and normal with image equal to the oracle set.
// The ratio |triples| / |ker N| must also match the oracle order.
AutGroupReport verify_quotient_structure(const TripleGroup& group,
                                         std::uint64_t seed = kDefaultSeed,
                                         const OracleLimits& limits = {});

}  // namespace brandt

#endif  // BRANDT_ORACLE_HPP_
