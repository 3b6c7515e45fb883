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

#ifndef BRANDT_CORPUS_HPP_
#define BRANDT_CORPUS_HPP_

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "brandt/semigroup.hpp"

namespace brandt {

struct CorpusEntry {
  std::string name;
  FiniteSemigroup monoid;
};

// Every monoid with zero (0 != 1) of order 2..max_order, one per isomorphism
// class, found by filtering all tables with 0 at index 0 and 1 at index 1.
std::vector<CorpusEntry> enumerate_monoids_with_zero(std::size_t max_order);

// The named families (i0, z2-0, z3-0, z4-0, zero2-1, zero3-1) followed by the
// enumerated monoids of order <= 4 that are not isomorphic to a named one.
const std::vector<CorpusEntry>& builtin_corpus();

// Corpus entries by name, plus "matrix-units" (= i0) and "zero3" (the
// three-element zero semigroup, which has no identity).
std::optional<FiniteSemigroup> builtin_semigroup(std::string_view name);
std::vector<std::string> builtin_names();

}  // namespace brandt

#endif  // BRANDT_CORPUS_HPP_
