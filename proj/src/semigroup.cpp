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

#include "brandt/semigroup.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "brandt/errors.hpp"

namespace brandt {

namespace {

std::string FreshLabel(const std::vector<std::string>& labels,
                       std::string base) {
  while (std::find(labels.begin(), labels.end(), base) != labels.end()) {
    base += "'";
  }
  return base;
}

}  // namespace

FiniteSemigroup FiniteSemigroup::FromTable(
    std::vector<std::string> labels, std::vector<std::vector<Element>> table,
    std::string name) {
  const std::size_t n = labels.size();
  if (n == 0) {
    throw Error(ErrorKind::kBadCardinality, "a semigroup needs an element");
  }
  {
    std::set<std::string> seen;
    for (const auto& l : labels) {
      if (!seen.insert(l).second) {
        throw Error(ErrorKind::kDuplicateLabel, "label '" + l + "' repeats");
      }
    }
  }
  if (table.size() != n) {
    throw Error(ErrorKind::kBadIndex, "table has " +
                                          std::to_string(table.size()) +
                                          " rows, expected " +
                                          std::to_string(n));
  }
  auto data = std::make_shared<Data>();
  data->table.reserve(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    if (table[i].size() != n) {
      throw Error(ErrorKind::kBadIndex,
                  "row " + std::to_string(i) + " has " +
                      std::to_string(table[i].size()) + " entries");
    }
    for (std::size_t j = 0; j < n; ++j) {
      if (table[i][j] >= n) {
        throw Error(ErrorKind::kBadIndex,
                    "entry [" + std::to_string(i) + "][" + std::to_string(j) +
                        "] = " + std::to_string(table[i][j]) +
                        " is out of range");
      }
      data->table.push_back(table[i][j]);
    }
  }
  const auto& t = data->table;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const std::size_t ij = t[i * n + j];
      for (std::size_t k = 0; k < n; ++k) {
        if (t[ij * n + k] != t[i * n + t[j * n + k]]) {
          throw NonAssociativeError(i, j, k);
        }
      }
    }
  }
  for (std::size_t x = 0; x < n && !data->zero; ++x) {
    bool ok = true;
    for (std::size_t y = 0; y < n && ok; ++y) {
      ok = t[x * n + y] == x && t[y * n + x] == x;
    }
    if (ok) data->zero = static_cast<Element>(x);
  }
  for (std::size_t x = 0; x < n && !data->identity; ++x) {
    bool ok = true;
    for (std::size_t y = 0; y < n && ok; ++y) {
      ok = t[x * n + y] == y && t[y * n + x] == y;
    }
    if (ok) data->identity = static_cast<Element>(x);
  }
  data->labels = std::move(labels);
  data->name = std::move(name);
  return FiniteSemigroup(std::move(data));
}

std::optional<Element> FiniteSemigroup::find_label(
    std::string_view label) const {
  const auto& ls = labels();
  auto it = std::find(ls.begin(), ls.end(), label);
  if (it == ls.end()) return std::nullopt;
  return static_cast<Element>(it - ls.begin());
}

FiniteSemigroup FiniteSemigroup::WithName(std::string name) const {
  auto data = std::make_shared<Data>(*data_);
  data->name = std::move(name);
  return FiniteSemigroup(std::move(data));
}

bool FiniteSemigroup::is_monoid_with_zero() const {
  return zero() && identity() && *zero() != *identity();
}

std::vector<std::vector<Element>> FiniteSemigroup::rows() const {
  const std::size_t n = size();
  std::vector<std::vector<Element>> out(n);
  for (std::size_t i = 0; i < n; ++i) {
    out[i].assign(data_->table.begin() + static_cast<std::ptrdiff_t>(i * n),
                  data_->table.begin() + static_cast<std::ptrdiff_t>((i + 1) * n));
  }
  return out;
}

bool operator==(const FiniteSemigroup& a, const FiniteSemigroup& b) {
  return a.data_ == b.data_ ||
         (a.labels() == b.labels() && a.flat_table() == b.flat_table());
}

bool is_idempotent(const FiniteSemigroup& s, Element e) {
  return s.product(e, e) == e;
}

bool natural_leq(const FiniteSemigroup& s, Element e, Element f) {
  if (e >= s.size() || f >= s.size()) {
    throw Error(ErrorKind::kOutOfRange, "element index out of range");
  }
  if (!is_idempotent(s, e) || !is_idempotent(s, f)) {
    throw Error(ErrorKind::kNotIdempotent,
                "natural order is defined on idempotents only");
  }
  return s.product(e, f) == e && s.product(f, e) == e;
}

std::vector<Element> idempotents(const FiniteSemigroup& s) {
  std::vector<Element> out;
  for (Element x = 0; x < s.size(); ++x) {
    if (is_idempotent(s, x)) out.push_back(x);
  }
  return out;
}

std::vector<Element> maximal_idempotents(const FiniteSemigroup& s) {
  const auto es = idempotents(s);
  std::vector<Element> out;
  for (Element e : es) {
    const bool dominated = std::any_of(es.begin(), es.end(), [&](Element f) {
      return f != e && natural_leq(s, e, f);
    });
    if (!dominated) out.push_back(e);
  }
  return out;
}

std::vector<std::pair<Element, Element>> natural_order_pairs(
    const FiniteSemigroup& s) {
  const auto es = idempotents(s);
  std::vector<std::pair<Element, Element>> out;
  for (Element e : es) {
    for (Element f : es) {
      if (e != f && natural_leq(s, e, f)) out.emplace_back(e, f);
    }
  }
  return out;
}

bool idempotents_form_band(const FiniteSemigroup& s) {
  const auto es = idempotents(s);
  for (Element e : es) {
    for (Element f : es) {
      if (!is_idempotent(s, s.product(e, f))) return false;
    }
  }
  return true;
}

UnitGroup::UnitGroup(FiniteSemigroup parent) : parent_(std::move(parent)) {
  if (!parent_.identity()) {
    throw Error(ErrorKind::kNoIdentity, "the group of units needs an identity");
  }
  const Element one = *parent_.identity();
  inverse_.assign(parent_.size(), std::nullopt);
  for (Element u = 0; u < parent_.size(); ++u) {
    for (Element v = 0; v < parent_.size(); ++v) {
      if (parent_.product(u, v) == one && parent_.product(v, u) == one) {
        inverse_[u] = v;
        members_.push_back(u);
        break;
      }
    }
  }
}

bool UnitGroup::contains(Element x) const {
  return x < inverse_.size() && inverse_[x].has_value();
}

Element UnitGroup::inverse(Element u) const {
  if (!contains(u)) {
    throw Error(ErrorKind::kOutOfRange,
                "element " + std::to_string(u) + " is not a unit");
  }
  return *inverse_[u];
}

UnitGroup unit_group(const FiniteSemigroup& s) { return UnitGroup(s); }

FiniteSemigroup adjoin_zero(const FiniteSemigroup& s) {
  const std::size_t n = s.size();
  auto labels = s.labels();
  labels.push_back(FreshLabel(labels, "0"));
  std::vector<std::vector<Element>> table(n + 1,
                                          std::vector<Element>(n + 1, n));
  for (Element i = 0; i < n; ++i) {
    for (Element j = 0; j < n; ++j) table[i][j] = s.product(i, j);
  }
  return FiniteSemigroup::FromTable(
      std::move(labels), std::move(table),
      s.name().empty() ? std::string() : s.name() + "^0");
}

FiniteSemigroup adjoin_identity(const FiniteSemigroup& s) {
  const std::size_t n = s.size();
  auto labels = s.labels();
  labels.push_back(FreshLabel(labels, "1"));
  std::vector<std::vector<Element>> table(n + 1, std::vector<Element>(n + 1));
  for (Element i = 0; i <= n; ++i) {
    for (Element j = 0; j <= n; ++j) {
      if (i == n) {
        table[i][j] = j;
      } else if (j == n) {
        table[i][j] = i;
      } else {
        table[i][j] = s.product(i, j);
      }
    }
  }
  return FiniteSemigroup::FromTable(
      std::move(labels), std::move(table),
      s.name().empty() ? std::string() : s.name() + "^1");
}

FiniteSemigroup construct_trivial_semigroup() {
  return FiniteSemigroup::FromTable({"e"}, {{0}}, "I");
}

FiniteSemigroup construct_zero_semigroup(std::size_t k) {
  if (k < 2) {
    throw Error(ErrorKind::kBadCardinality,
                "zero semigroup needs k >= 2, got " + std::to_string(k));
  }
  std::vector<std::string> labels{"0"};
  for (std::size_t i = 1; i < k; ++i) labels.push_back("z" + std::to_string(i));
  return FiniteSemigroup::FromTable(
      std::move(labels), std::vector<std::vector<Element>>(k, std::vector<Element>(k, 0)),
      "zero" + std::to_string(k));
}

FiniteSemigroup construct_cyclic_group(std::size_t m) {
  if (m < 1) {
    throw Error(ErrorKind::kBadCardinality, "cyclic group needs m >= 1");
  }
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < m; ++i) {
    labels.push_back(i == 0 ? "1" : i == 1 ? "g" : "g^" + std::to_string(i));
  }
  std::vector<std::vector<Element>> table(m, std::vector<Element>(m));
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      table[i][j] = static_cast<Element>((i + j) % m);
    }
  }
  return FiniteSemigroup::FromTable(std::move(labels), std::move(table),
                                    "Z" + std::to_string(m));
}

FiniteSemigroup construct_cyclic_group_with_zero(std::size_t m) {
  return adjoin_zero(construct_cyclic_group(m));
}

}  // namespace brandt
