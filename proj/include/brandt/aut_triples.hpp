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

#ifndef BRANDT_AUT_TRIPLES_HPP_
#define BRANDT_AUT_TRIPLES_HPP_

#include <cstddef>
#include <cstdint>
#include <random>
#include <vector>

#include "brandt/brandt_extension.hpp"
#include "brandt/semigroup.hpp"
#include "brandt/semigroup_map.hpp"

namespace brandt {

// [phi, h, u]: a permutation phi of {0..lambda-1}, an automorphism h of the
// base monoid, and a map u from {0..lambda-1} into its group of units.
// Everything acts on the right: (alpha)phi = phi[alpha], (alpha)u = u[alpha].
struct AutTriple {
  std::vector<std::size_t> phi;
  SemigroupMap h;
  std::vector<Element> u;

  friend bool operator==(const AutTriple& a, const AutTriple& b) {
    return a.phi == b.phi && a.h == b.h && a.u == b.u;
  }
};

struct TripleLimits {
  // Cap on (|S|-2)! when scanning permutations of the base for Aut(S).
  std::uint64_t max_base_permutations = 3628800;
  // Cap on the size of any materialized list of triples.
  std::uint64_t max_triples = 1000000;
};

// The group of triples over a Brandt extension of a monoid with zero, with
// the product
//   [phi, h, u] . [phi', h', u'] = [phi phi', h h', alpha -> ((alpha)phi)u' . ((alpha)u)h']
// and its realization as automorphisms of the carrier,
//   (alpha, s, beta) -> ((alpha)phi, (alpha)u . (s)h . ((beta)u)^-1, (beta)phi).
//
// Aut(S) is found by scanning every permutation of S that fixes 0_S and 1_S;
// it does not use the backtracking search in oracle.hpp.
class TripleGroup {
 public:
  // Throws NotMonoidWithZero for a base without identity, BudgetExceeded when
  // the base is too large to scan.
  explicit TripleGroup(BrandtSemigroup extension, TripleLimits limits = {});

  const BrandtSemigroup& extension() const { return extension_; }
  const FiniteSemigroup& base() const { return extension_.base(); }
  std::size_t lambda() const { return extension_.lambda(); }
  const UnitGroup& units() const { return units_; }
  // Sorted by image array.
  const std::vector<SemigroupMap>& base_automorphisms() const {
    return base_automorphisms_;
  }
  const TripleLimits& limits() const { return limits_; }

  AutTriple identity() const;

  // Throws MismatchedBase (wrong lambda or base) or InvalidTriple.
  void Validate(const AutTriple& t) const;
  bool IsValid(const AutTriple& t) const;

  SemigroupMap Realize(const AutTriple& t) const;
  AutTriple Compose(const AutTriple& t, const AutTriple& next) const;
  AutTriple Invert(const AutTriple& t) const;

  // ker N: phi trivial and u constant at c, with (s)h = c^-1 s c.
  bool InKernel(const AutTriple& t) const;
  AutTriple KernelElement(Element unit) const;
  // One element per unit, in unit index order.
  std::vector<AutTriple> Kernel() const;

  // The member of t . ker N with u[0] = 1_S.
  AutTriple Normalize(const AutTriple& t) const;
  bool IsNormalized(const AutTriple& t) const;

  // phi in lexicographic order, then h, then u lexicographically.
  std::vector<AutTriple> EnumerateNormalized() const;
  std::vector<AutTriple> EnumerateAll() const;

  // lambda! . |Aut(S)| . |H_1|^lambda
  std::uint64_t TripleGroupOrder() const;
  std::uint64_t KernelOrder() const { return units_.order(); }
  // TripleGroupOrder() / |ker N|
  std::uint64_t AutGroupOrder() const;

  AutTriple RandomTriple(std::mt19937_64& rng) const;

 private:
  std::vector<AutTriple> Enumerate(bool normalized) const;

  BrandtSemigroup extension_;
  TripleLimits limits_;
  UnitGroup units_;
  std::vector<SemigroupMap> base_automorphisms_;
};

// All automorphisms of a monoid with zero (or any semigroup) by testing each
// permutation that fixes the zero and identity.
std::vector<SemigroupMap> base_automorphisms_by_scan(
    const FiniteSemigroup& s, std::uint64_t max_permutations = 3628800);

std::uint64_t aut_group_order(const BrandtSemigroup& b,
                              const TripleLimits& limits = {});

// Uniform in [0, n) from the raw engine output so draws are identical on
// every standard library.
std::size_t uniform_index(std::mt19937_64& rng, std::size_t n);

}  // namespace brandt

#endif  // BRANDT_AUT_TRIPLES_HPP_
