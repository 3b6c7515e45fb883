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

#ifndef BRANDT_SEMIGROUP_HPP_
#define BRANDT_SEMIGROUP_HPP_

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace brandt {

// Elements of a finite semigroup are indices into its ordered label list.
using Element = std::uint32_t;

// A finite semigroup given by its Cayley table. Instances are immutable and
// share their storage, so copies are cheap. Zero and identity are detected
// from the table, never declared.
class FiniteSemigroup {
 public:
  // Validates shape, indices and label uniqueness, then checks associativity
  // exhaustively (n^3). Throws brandt::Error on failure.
  static FiniteSemigroup FromTable(std::vector<std::string> labels,
                                   std::vector<std::vector<Element>> table,
                                   std::string name = {});

  std::size_t size() const { return data_->labels.size(); }

  Element product(Element a, Element b) const {
    return data_->table[static_cast<std::size_t>(a) * size() + b];
  }

  const std::vector<std::string>& labels() const { return data_->labels; }
  const std::string& label(Element x) const { return data_->labels.at(x); }
  std::optional<Element> find_label(std::string_view label) const;

  const std::string& name() const { return data_->name; }
  FiniteSemigroup WithName(std::string name) const;

  std::optional<Element> zero() const { return data_->zero; }
  std::optional<Element> identity() const { return data_->identity; }

  // Zero and identity both present and distinct.
  bool is_monoid_with_zero() const;

  std::vector<std::vector<Element>> rows() const;
  const std::vector<Element>& flat_table() const { return data_->table; }

  // Same labels and same table; the name is ignored.
  friend bool operator==(const FiniteSemigroup& a, const FiniteSemigroup& b);

  // True when both handles refer to the same stored semigroup.
  bool SharesStorageWith(const FiniteSemigroup& other) const {
    return data_ == other.data_;
  }

 private:
  struct Data {
    std::string name;
    std::vector<std::string> labels;
    std::vector<Element> table;
    std::optional<Element> zero;
    std::optional<Element> identity;
  };

  explicit FiniteSemigroup(std::shared_ptr<const Data> data)
      : data_(std::move(data)) {}

  std::shared_ptr<const Data> data_;
};

inline FiniteSemigroup validate_semigroup(
    std::vector<std::string> labels, std::vector<std::vector<Element>> table,
    std::string name = {}) {
  return FiniteSemigroup::FromTable(std::move(labels), std::move(table),
                                    std::move(name));
}

bool is_idempotent(const FiniteSemigroup& s, Element e);

// e <= f iff ef = fe = e. Throws NotIdempotent unless both are idempotents.
bool natural_leq(const FiniteSemigroup& s, Element e, Element f);

std::vector<Element> idempotents(const FiniteSemigroup& s);
std::vector<Element> maximal_idempotents(const FiniteSemigroup& s);

// All pairs (e, f) of idempotents with e <= f, e != f.
std::vector<std::pair<Element, Element>> natural_order_pairs(
    const FiniteSemigroup& s);

// Whether E(S) is closed under the product.
bool idempotents_form_band(const FiniteSemigroup& s);

// The group of units H_1 of a monoid.
class UnitGroup {
 public:
  explicit UnitGroup(FiniteSemigroup parent);

  const FiniteSemigroup& parent() const { return parent_; }
  Element one() const { return *parent_.identity(); }
  const std::vector<Element>& members() const { return members_; }
  std::size_t order() const { return members_.size(); }
  bool contains(Element x) const;
  Element inverse(Element u) const;

 private:
  FiniteSemigroup parent_;
  std::vector<Element> members_;
  std::vector<std::optional<Element>> inverse_;
};

// Throws NoIdentity when S is not a monoid.
UnitGroup unit_group(const FiniteSemigroup& s);

// Append a fresh absorbing (resp. neutral) element, even when S already has
// one. The original table is embedded unchanged at indices 0..n-1.
FiniteSemigroup adjoin_zero(const FiniteSemigroup& s);
FiniteSemigroup adjoin_identity(const FiniteSemigroup& s);

FiniteSemigroup construct_trivial_semigroup();
// k >= 2 elements, every product equals the zero (index 0).
FiniteSemigroup construct_zero_semigroup(std::size_t k);
// Z_m as {1, g, g^2, ...}; m >= 1.
FiniteSemigroup construct_cyclic_group(std::size_t m);
// Z_m with an adjoined zero as the last element; m >= 1.
FiniteSemigroup construct_cyclic_group_with_zero(std::size_t m);

}  // namespace brandt

#endif  // BRANDT_SEMIGROUP_HPP_
