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

#ifndef BRANDT_SEMIGROUP_MAP_HPP_
#define BRANDT_SEMIGROUP_MAP_HPP_

#include <span>
#include <vector>

#include "brandt/semigroup.hpp"

namespace brandt {

// A total map between finite semigroups, stored as an image array.
//
// Maps act on the right: (x)(f g) = ((x)f)g, so `f.Then(g)` applies f first.
// Homomorphism and bijectivity are computed once at construction.
class SemigroupMap {
 public:
  SemigroupMap(FiniteSemigroup source, FiniteSemigroup target,
               std::vector<Element> images);

  static SemigroupMap Identity(const FiniteSemigroup& s);

  const FiniteSemigroup& source() const { return source_; }
  const FiniteSemigroup& target() const { return target_; }
  const std::vector<Element>& images() const { return images_; }

  Element operator()(Element x) const { return images_.at(x); }

  bool is_homomorphism() const { return is_homomorphism_; }
  bool is_bijective() const { return is_bijective_; }
  bool is_automorphism() const;

  SemigroupMap Then(const SemigroupMap& next) const;
  // Requires a bijection; throws NotAutomorphism otherwise.
  SemigroupMap Inverse() const;

  friend bool operator==(const SemigroupMap& a, const SemigroupMap& b) {
    return a.images_ == b.images_ && a.source_ == b.source_ &&
           a.target_ == b.target_;
  }

 private:
  FiniteSemigroup source_;
  FiniteSemigroup target_;
  std::vector<Element> images_;
  bool is_homomorphism_ = false;
  bool is_bijective_ = false;
};

// Bijective and multiplicative. A wrong-length image array is not a self-map
// and yields false.
bool is_automorphism(const FiniteSemigroup& s, std::span<const Element> images);

// The extension f^ of an automorphism f of S to S^0 (fresh zero appended by
// adjoin_zero) that fixes the new zero. Throws NotAutomorphism.
SemigroupMap extend_automorphism_to_zero(const FiniteSemigroup& s,
                                         const SemigroupMap& f);

}  // namespace brandt

#endif  // BRANDT_SEMIGROUP_MAP_HPP_
