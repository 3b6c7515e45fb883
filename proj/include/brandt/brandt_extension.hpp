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

#ifndef BRANDT_BRANDT_EXTENSION_HPP_
#define BRANDT_BRANDT_EXTENSION_HPP_

#include <cstddef>
#include <optional>
#include <vector>

#include "brandt/semigroup.hpp"

namespace brandt {

// Coordinates (row, middle, col) of a nonzero element of B^0_lambda(S);
// `middle` is an index into the base semigroup and is never its zero.
struct BrandtCoord {
  std::size_t row = 0;
  Element middle = 0;
  std::size_t col = 0;

  friend bool operator==(const BrandtCoord&, const BrandtCoord&) = default;
};

struct ConstructionLimits {
  std::size_t max_lambda = 6;
};

// The Brandt lambda^0-extension B^0_lambda(S) of a semigroup S with zero,
// materialized as a FiniteSemigroup (the carrier).
//
// Carrier layout: index 0 is the zero; (row, s, col) sits at
//   1 + row * |S*| * lambda + rank(s) * lambda + col
// where rank(s) is the position of s among the nonzero base elements in
// index order. Products landing in {(a, 0_S, b)} collapse to the zero.
class BrandtSemigroup {
 public:
  const FiniteSemigroup& base() const { return base_; }
  std::size_t lambda() const { return lambda_; }
  const FiniteSemigroup& carrier() const { return carrier_; }

  // S* in index order.
  const std::vector<Element>& nonzero_base() const { return nonzero_; }

  Element zero() const { return 0; }

  Element encode(std::size_t row, Element middle, std::size_t col) const;
  Element encode(const BrandtCoord& c) const {
    return encode(c.row, c.middle, c.col);
  }
  // nullopt is the zero.
  std::optional<BrandtCoord> decode(Element x) const;

  // (alpha, 1_S, alpha); requires the base to have an identity.
  Element diagonal_identity(std::size_t alpha) const;

 private:
  friend BrandtSemigroup construct_brandt_with_zero(const FiniteSemigroup&,
                                                    std::size_t,
                                                    const ConstructionLimits&,
                                                    bool);

  BrandtSemigroup(FiniteSemigroup base, std::size_t lambda,
                  std::vector<Element> nonzero, std::vector<int> rank,
                  FiniteSemigroup carrier)
      : base_(std::move(base)),
        lambda_(lambda),
        nonzero_(std::move(nonzero)),
        rank_(std::move(rank)),
        carrier_(std::move(carrier)) {}

  FiniteSemigroup base_;
  std::size_t lambda_;
  std::vector<Element> nonzero_;
  std::vector<int> rank_;  // -1 for the base zero
  FiniteSemigroup carrier_;
};

// B^0_lambda(S) for a monoid S with zero, 0_S != 1_S. Throws
// NotMonoidWithZero, or OutOfRange when lambda is 0 or above the cap.
BrandtSemigroup construct_brandt(const FiniteSemigroup& s, std::size_t lambda,
                                 const ConstructionLimits& limits = {});

// Same construction, requiring only a zero in S. Used for zero semigroups,
// which have no identity. `pair_labels` renders nonzero elements as
// "(a|b)" and is only meaningful when |S*| = 1.
BrandtSemigroup construct_brandt_with_zero(
    const FiniteSemigroup& s, std::size_t lambda,
    const ConstructionLimits& limits = {}, bool pair_labels = false);

// The lambda x lambda matrix units B_lambda = B^0_lambda(I^0).
BrandtSemigroup matrix_units(std::size_t lambda,
                             const ConstructionLimits& limits = {});

// B^0_lambda(G^0) for a group G. Throws NotAGroup.
BrandtSemigroup brandt_semigroup_of_group(
    const FiniteSemigroup& g, std::size_t lambda,
    const ConstructionLimits& limits = {});

}  // namespace brandt

#endif  // BRANDT_BRANDT_EXTENSION_HPP_
