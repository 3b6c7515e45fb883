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

#include "brandt/corpus.hpp"

#include <algorithm>

#include "brandt/errors.hpp"
#include "brandt/oracle.hpp"

namespace brandt {

namespace {

bool IsomorphicToAny(const FiniteSemigroup& s,
                     const std::vector<CorpusEntry>& entries) {
  return std::any_of(entries.begin(), entries.end(), [&](const CorpusEntry& e) {
    return e.monoid.size() == s.size() && find_isomorphism(s, e.monoid);
  });
}

std::vector<CorpusEntry> MonoidsOfOrder(std::size_t n) {
  static const char* const kExtra[] = {"a", "b", "c", "d"};
  std::vector<std::string> labels{"0", "1"};
  for (std::size_t i = 2; i < n; ++i) labels.push_back(kExtra[i - 2]);
  const std::size_t free = (n - 2) * (n - 2);
  std::size_t combos = 1;
  for (std::size_t i = 0; i < free; ++i) combos *= n;

  std::vector<CorpusEntry> out;
  for (std::size_t code = 0; code < combos; ++code) {
    std::vector<std::vector<Element>> table(n, std::vector<Element>(n, 0));
    for (Element j = 0; j < n; ++j) {
      table[1][j] = j;
      table[j][1] = j;
    }
    table[0][1] = table[1][0] = 0;
    std::size_t rest = code;
    for (std::size_t i = 2; i < n; ++i) {
      for (std::size_t j = 2; j < n; ++j) {
        table[i][j] = static_cast<Element>(rest % n);
        rest /= n;
      }
    }
    try {
      FiniteSemigroup s = FiniteSemigroup::FromTable(labels, std::move(table));
      if (!s.is_monoid_with_zero() || IsomorphicToAny(s, out)) continue;
      const std::string name =
          "m" + std::to_string(n) + "-" + std::to_string(out.size() + 1);
      out.push_back({name, s.WithName(name)});
    } catch (const NonAssociativeError&) {
    }
  }
  return out;
}

std::vector<CorpusEntry> BuildCorpus() {
  std::vector<CorpusEntry> corpus = {
      {"i0", construct_cyclic_group_with_zero(1).WithName("i0")},
      {"z2-0", construct_cyclic_group_with_zero(2).WithName("z2-0")},
      {"z3-0", construct_cyclic_group_with_zero(3).WithName("z3-0")},
      {"z4-0", construct_cyclic_group_with_zero(4).WithName("z4-0")},
      {"zero2-1", adjoin_identity(construct_zero_semigroup(2)).WithName("zero2-1")},
      {"zero3-1", adjoin_identity(construct_zero_semigroup(3)).WithName("zero3-1")},
  };
  const std::size_t named = corpus.size();
  for (CorpusEntry& e : enumerate_monoids_with_zero(4)) {
    const std::vector<CorpusEntry> named_entries(corpus.begin(),
                                                 corpus.begin() + named);
    if (!IsomorphicToAny(e.monoid, named_entries)) corpus.push_back(std::move(e));
  }
  return corpus;
}

}  // namespace

std::vector<CorpusEntry> enumerate_monoids_with_zero(std::size_t max_order) {
  std::vector<CorpusEntry> out;
  for (std::size_t n = 2; n <= max_order; ++n) {
    for (CorpusEntry& e : MonoidsOfOrder(n)) out.push_back(std::move(e));
  }
  return out;
}

const std::vector<CorpusEntry>& builtin_corpus() {
  static const std::vector<CorpusEntry> corpus = BuildCorpus();
  return corpus;
}

std::optional<FiniteSemigroup> builtin_semigroup(std::string_view name) {
  if (name == "matrix-units") name = "i0";
  if (name == "zero3") return construct_zero_semigroup(3);
  for (const CorpusEntry& e : builtin_corpus()) {
    if (e.name == name) return e.monoid;
  }
  return std::nullopt;
}

std::vector<std::string> builtin_names() {
  std::vector<std::string> names{"matrix-units", "zero3"};
  for (const CorpusEntry& e : builtin_corpus()) names.push_back(e.name);
  return names;
}

}  // namespace brandt
