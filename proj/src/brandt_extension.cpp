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

#include "brandt/brandt_extension.hpp"

#include <string>

#include "brandt/errors.hpp"

namespace brandt {

Element BrandtSemigroup::encode(std::size_t row, Element middle,
                                std::size_t col) const {
  if (row >= lambda_ || col >= lambda_ || middle >= base_.size() ||
      rank_[middle] < 0) {
    throw Error(ErrorKind::kOutOfRange,
                "no element (" + std::to_string(row) + ", " +
                    std::to_string(middle) + ", " + std::to_string(col) +
                    ") in the extension");
  }
  const std::size_t k = nonzero_.size();
  return static_cast<Element>(1 + row * k * lambda_ +
                              static_cast<std::size_t>(rank_[middle]) * lambda_ +
                              col);
}

std::optional<BrandtCoord> BrandtSemigroup::decode(Element x) const {
  if (x >= carrier_.size()) {
    throw Error(ErrorKind::kOutOfRange,
                "carrier index " + std::to_string(x) + " out of range");
  }
  if (x == 0) return std::nullopt;
  const std::size_t k = nonzero_.size();
  const std::size_t offset = x - 1;
  return BrandtCoord{offset / (k * lambda_),
                     nonzero_[(offset / lambda_) % k], offset % lambda_};
}

Element BrandtSemigroup::diagonal_identity(std::size_t alpha) const {
  if (!base_.identity()) {
    throw Error(ErrorKind::kNoIdentity, "the base semigroup has no identity");
  }
  return encode(alpha, *base_.identity(), alpha);
}

BrandtSemigroup construct_brandt_with_zero(const FiniteSemigroup& s,
                                           std::size_t lambda,
                                           const ConstructionLimits& limits,
                                           bool pair_labels) {
  if (lambda < 1 || lambda > limits.max_lambda) {
    throw Error(ErrorKind::kOutOfRange,
                "lambda = " + std::to_string(lambda) + " outside [1, " +
                    std::to_string(limits.max_lambda) + "]");
  }
  if (!s.zero()) {
    throw Error(ErrorKind::kNotMonoidWithZero, "the base semigroup has no zero");
  }
  const Element base_zero = *s.zero();
  std::vector<Element> nonzero;
  std::vector<int> rank(s.size(), -1);
  for (Element x = 0; x < s.size(); ++x) {
    if (x == base_zero) continue;
    rank[x] = static_cast<int>(nonzero.size());
    nonzero.push_back(x);
  }
  const std::size_t k = nonzero.size();
  const std::size_t n = lambda * lambda * k + 1;

  std::vector<BrandtCoord> coords(n);
  std::vector<std::string> labels(n);
  labels[0] = "0";
  for (std::size_t x = 1; x < n; ++x) {
    const std::size_t offset = x - 1;
    coords[x] = {offset / (k * lambda), nonzero[(offset / lambda) % k],
                 offset % lambda};
    labels[x] = pair_labels
                    ? "(" + std::to_string(coords[x].row) + "|" +
                          std::to_string(coords[x].col) + ")"
                    : "(" + std::to_string(coords[x].row) + "|" +
                          s.label(coords[x].middle) + "|" +
                          std::to_string(coords[x].col) + ")";
  }
  auto encode = [&](std::size_t row, Element middle, std::size_t col) {
    return static_cast<Element>(1 + row * k * lambda +
                                static_cast<std::size_t>(rank[middle]) * lambda +
                                col);
  };

  std::vector<std::vector<Element>> table(n, std::vector<Element>(n, 0));
  for (std::size_t x = 1; x < n; ++x) {
    for (std::size_t y = 1; y < n; ++y) {
      if (coords[x].col != coords[y].row) continue;
      const Element ab = s.product(coords[x].middle, coords[y].middle);
      if (ab == base_zero) continue;
      table[x][y] = encode(coords[x].row, ab, coords[y].col);
    }
  }
  const std::string base_name = s.name().empty() ? "S" : s.name();
  FiniteSemigroup carrier = FiniteSemigroup::FromTable(
      std::move(labels), std::move(table),
      "B0_" + std::to_string(lambda) + "(" + base_name + ")");
  return BrandtSemigroup(s, lambda, std::move(nonzero), std::move(rank),
                         std::move(carrier));
}

BrandtSemigroup construct_brandt(const FiniteSemigroup& s, std::size_t lambda,
                                 const ConstructionLimits& limits) {
  if (!s.is_monoid_with_zero()) {
    throw Error(ErrorKind::kNotMonoidWithZero,
                "base must have an identity and a distinct zero");
  }
  return construct_brandt_with_zero(s, lambda, limits);
}

BrandtSemigroup matrix_units(std::size_t lambda,
                             const ConstructionLimits& limits) {
  const FiniteSemigroup i0 = construct_cyclic_group_with_zero(1).WithName("I^0");
  return construct_brandt_with_zero(i0, lambda, limits, /*pair_labels=*/true);
}

BrandtSemigroup brandt_semigroup_of_group(const FiniteSemigroup& g,
                                          std::size_t lambda,
                                          const ConstructionLimits& limits) {
  if (!g.identity()) {
    throw Error(ErrorKind::kNotAGroup, "no identity");
  }
  if (unit_group(g).order() != g.size()) {
    throw Error(ErrorKind::kNotAGroup, "some element is not invertible");
  }
  return construct_brandt(adjoin_zero(g), lambda, limits);
}

}  // namespace brandt
