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

#include "brandt/aut_triples.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <string>

#include "brandt/errors.hpp"

namespace brandt {

namespace {

std::uint64_t CheckedMul(std::uint64_t a, std::uint64_t b) {
  if (a != 0 && b > std::numeric_limits<std::uint64_t>::max() / a) {
    throw Error(ErrorKind::kBudgetExceeded, "count overflows 64 bits");
  }
  return a * b;
}

std::uint64_t Factorial(std::size_t n) {
  std::uint64_t f = 1;
  for (std::size_t i = 2; i <= n; ++i) f = CheckedMul(f, i);
  return f;
}

std::uint64_t Power(std::uint64_t base, std::size_t exp) {
  std::uint64_t p = 1;
  for (std::size_t i = 0; i < exp; ++i) p = CheckedMul(p, base);
  return p;
}

bool IsPermutation(const std::vector<std::size_t>& phi) {
  std::vector<bool> hit(phi.size(), false);
  for (std::size_t a : phi) {
    if (a >= phi.size() || hit[a]) return false;
    hit[a] = true;
  }
  return true;
}

}  // namespace

std::size_t uniform_index(std::mt19937_64& rng, std::size_t n) {
  const std::uint64_t range = n;
  const std::uint64_t limit =
      std::numeric_limits<std::uint64_t>::max() -
      std::numeric_limits<std::uint64_t>::max() % range;
  std::uint64_t draw = rng();
  while (draw >= limit) draw = rng();
  return static_cast<std::size_t>(draw % range);
}

std::vector<SemigroupMap> base_automorphisms_by_scan(
    const FiniteSemigroup& s, std::uint64_t max_permutations) {
  std::vector<Element> fixed;
  if (s.zero()) fixed.push_back(*s.zero());
  if (s.identity() && s.identity() != s.zero()) fixed.push_back(*s.identity());
  std::vector<Element> movable;
  for (Element x = 0; x < s.size(); ++x) {
    if (std::find(fixed.begin(), fixed.end(), x) == fixed.end()) {
      movable.push_back(x);
    }
  }
  if (movable.size() > 20 || Factorial(movable.size()) > max_permutations) {
    throw Error(ErrorKind::kBudgetExceeded,
                std::to_string(movable.size()) +
                    "! permutations exceed the base scan budget");
  }
  std::vector<SemigroupMap> out;
  std::vector<Element> targets = movable;
  std::vector<Element> images(s.size());
  for (Element x : fixed) images[x] = x;
  do {
    for (std::size_t i = 0; i < movable.size(); ++i) {
      images[movable[i]] = targets[i];
    }
    if (is_automorphism(s, images)) out.emplace_back(s, s, images);
  } while (std::next_permutation(targets.begin(), targets.end()));
  std::sort(out.begin(), out.end(),
            [](const SemigroupMap& a, const SemigroupMap& b) {
              return a.images() < b.images();
            });
  return out;
}

TripleGroup::TripleGroup(BrandtSemigroup extension, TripleLimits limits)
    : extension_(std::move(extension)),
      limits_(limits),
      units_([&]() {
        if (!extension_.base().is_monoid_with_zero()) {
          throw Error(ErrorKind::kNotMonoidWithZero,
                      "triples need a monoid with zero as the base");
        }
        return unit_group(extension_.base());
      }()),
      base_automorphisms_(base_automorphisms_by_scan(
          extension_.base(), limits_.max_base_permutations)) {}

AutTriple TripleGroup::identity() const {
  std::vector<std::size_t> phi(lambda());
  std::iota(phi.begin(), phi.end(), std::size_t{0});
  return {std::move(phi), SemigroupMap::Identity(base()),
          std::vector<Element>(lambda(), units_.one())};
}

void TripleGroup::Validate(const AutTriple& t) const {
  if (t.phi.size() != lambda() || t.u.size() != lambda() ||
      !(t.h.source() == base())) {
    throw Error(ErrorKind::kMismatchedBase,
                "triple was built for a different extension");
  }
  if (!IsPermutation(t.phi)) {
    throw Error(ErrorKind::kInvalidTriple, "phi is not a permutation");
  }
  if (!t.h.is_automorphism()) {
    throw Error(ErrorKind::kInvalidTriple,
                "h is not an automorphism of the base");
  }
  for (Element x : t.u) {
    if (!units_.contains(x)) {
      throw Error(ErrorKind::kInvalidTriple,
                  "u takes the non-unit value " + std::to_string(x));
    }
  }
}

bool TripleGroup::IsValid(const AutTriple& t) const {
  try {
    Validate(t);
    return true;
  } catch (const Error&) {
    return false;
  }
}

SemigroupMap TripleGroup::Realize(const AutTriple& t) const {
  Validate(t);
  const FiniteSemigroup& s = base();
  const FiniteSemigroup& carrier = extension_.carrier();
  std::vector<Element> images(carrier.size());
  images[0] = extension_.zero();
  for (Element x = 1; x < carrier.size(); ++x) {
    const BrandtCoord c = *extension_.decode(x);
    const Element middle =
        s.product(s.product(t.u[c.row], t.h(c.middle)), units_.inverse(t.u[c.col]));
    images[x] = extension_.encode(t.phi[c.row], middle, t.phi[c.col]);
  }
  return SemigroupMap(carrier, carrier, std::move(images));
}

AutTriple TripleGroup::Compose(const AutTriple& t, const AutTriple& next) const {
  Validate(t);
  Validate(next);
  const std::size_t n = lambda();
  AutTriple out{std::vector<std::size_t>(n), t.h.Then(next.h),
                std::vector<Element>(n)};
  for (std::size_t a = 0; a < n; ++a) {
    out.phi[a] = next.phi[t.phi[a]];
    out.u[a] = base().product(next.u[t.phi[a]], next.h(t.u[a]));
  }
  return out;
}

AutTriple TripleGroup::Invert(const AutTriple& t) const {
  Validate(t);
  const std::size_t n = lambda();
  std::vector<std::size_t> phi_inv(n);
  for (std::size_t a = 0; a < n; ++a) phi_inv[t.phi[a]] = a;
  SemigroupMap h_inv = t.h.Inverse();
  std::vector<Element> u(n);
  for (std::size_t a = 0; a < n; ++a) {
    u[a] = h_inv(units_.inverse(t.u[phi_inv[a]]));
  }
  return {std::move(phi_inv), std::move(h_inv), std::move(u)};
}

bool TripleGroup::InKernel(const AutTriple& t) const {
  Validate(t);
  for (std::size_t a = 0; a < lambda(); ++a) {
    if (t.phi[a] != a || t.u[a] != t.u[0]) return false;
  }
  const Element c = t.u[0];
  const Element c_inv = units_.inverse(c);
  for (Element x = 0; x < base().size(); ++x) {
    if (t.h(x) != base().product(base().product(c_inv, x), c)) return false;
  }
  return true;
}

AutTriple TripleGroup::KernelElement(Element unit) const {
  const Element inv = units_.inverse(unit);
  std::vector<Element> conj(base().size());
  for (Element x = 0; x < base().size(); ++x) {
    conj[x] = base().product(base().product(inv, x), unit);
  }
  AutTriple out = identity();
  out.h = SemigroupMap(base(), base(), std::move(conj));
  out.u.assign(lambda(), unit);
  return out;
}

std::vector<AutTriple> TripleGroup::Kernel() const {
  std::vector<AutTriple> out;
  for (Element c : units_.members()) out.push_back(KernelElement(c));
  return out;
}

AutTriple TripleGroup::Normalize(const AutTriple& t) const {
  Validate(t);
  return Compose(t, KernelElement(units_.inverse(t.u[0])));
}

bool TripleGroup::IsNormalized(const AutTriple& t) const {
  return IsValid(t) && t.u[0] == units_.one();
}

std::uint64_t TripleGroup::TripleGroupOrder() const {
  return CheckedMul(CheckedMul(Factorial(lambda()), base_automorphisms_.size()),
                    Power(units_.order(), lambda()));
}

std::uint64_t TripleGroup::AutGroupOrder() const {
  return TripleGroupOrder() / KernelOrder();
}

std::vector<AutTriple> TripleGroup::EnumerateNormalized() const {
  return Enumerate(true);
}

std::vector<AutTriple> TripleGroup::EnumerateAll() const {
  return Enumerate(false);
}

std::vector<AutTriple> TripleGroup::Enumerate(bool normalized) const {
  const std::uint64_t count = normalized ? AutGroupOrder() : TripleGroupOrder();
  if (count > limits_.max_triples) {
    throw Error(ErrorKind::kBudgetExceeded,
                std::to_string(count) + " triples exceed the budget of " +
                    std::to_string(limits_.max_triples));
  }
  const std::size_t n = lambda();
  const auto& members = units_.members();
  const std::size_t first_free = normalized ? 1 : 0;
  const std::size_t one_pos = static_cast<std::size_t>(
      std::find(members.begin(), members.end(), units_.one()) - members.begin());

  std::vector<AutTriple> out;
  out.reserve(count);
  std::vector<std::size_t> phi(n);
  std::iota(phi.begin(), phi.end(), std::size_t{0});
  do {
    for (const SemigroupMap& h : base_automorphisms_) {
      // odometer over u[first_free..n-1]
      std::vector<std::size_t> digits(n, 0);
      if (normalized) digits[0] = one_pos;
      while (true) {
        std::vector<Element> u(n);
        for (std::size_t a = 0; a < n; ++a) u[a] = members[digits[a]];
        out.push_back({phi, h, std::move(u)});
        bool advanced = false;
        for (std::size_t pos = n; pos > first_free && !advanced;) {
          --pos;
          if (++digits[pos] < members.size()) {
            advanced = true;
          } else {
            digits[pos] = 0;
          }
        }
        if (!advanced) break;
      }
    }
  } while (std::next_permutation(phi.begin(), phi.end()));
  return out;
}

AutTriple TripleGroup::RandomTriple(std::mt19937_64& rng) const {
  const std::size_t n = lambda();
  std::vector<std::size_t> phi(n);
  std::iota(phi.begin(), phi.end(), std::size_t{0});
  for (std::size_t i = n; i > 1; --i) {
    std::swap(phi[i - 1], phi[uniform_index(rng, i)]);
  }
  const SemigroupMap& h =
      base_automorphisms_[uniform_index(rng, base_automorphisms_.size())];
  std::vector<Element> u(n);
  for (auto& x : u) {
    x = units_.members()[uniform_index(rng, units_.order())];
  }
  return {std::move(phi), h, std::move(u)};
}

std::uint64_t aut_group_order(const BrandtSemigroup& b,
                              const TripleLimits& limits) {
  return TripleGroup(b, limits).AutGroupOrder();
}

}  // namespace brandt
