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

#include "brandt/semigroup_map.hpp"

#include <numeric>
#include <string>

#include "brandt/errors.hpp"

namespace brandt {

namespace {

bool IsPermutation(std::span<const Element> images, std::size_t n) {
  if (images.size() != n) return false;
  std::vector<bool> hit(n, false);
  for (Element y : images) {
    if (y >= n || hit[y]) return false;
    hit[y] = true;
  }
  return true;
}

bool IsMultiplicative(const FiniteSemigroup& s, const FiniteSemigroup& t,
                      std::span<const Element> images) {
  const std::size_t n = s.size();
  for (Element i = 0; i < n; ++i) {
    for (Element j = 0; j < n; ++j) {
      if (images[s.product(i, j)] != t.product(images[i], images[j])) {
        return false;
      }
    }
  }
  return true;
}

}  // namespace

SemigroupMap::SemigroupMap(FiniteSemigroup source, FiniteSemigroup target,
                           std::vector<Element> images)
    : source_(std::move(source)),
      target_(std::move(target)),
      images_(std::move(images)) {
  if (images_.size() != source_.size()) {
    throw Error(ErrorKind::kBadIndex,
                "map has " + std::to_string(images_.size()) +
                    " images for a source of size " +
                    std::to_string(source_.size()));
  }
  for (Element y : images_) {
    if (y >= target_.size()) {
      throw Error(ErrorKind::kBadIndex,
                  "image " + std::to_string(y) + " outside the target");
    }
  }
  is_bijective_ = source_.size() == target_.size() &&
                  IsPermutation(images_, target_.size());
  is_homomorphism_ = IsMultiplicative(source_, target_, images_);
}

SemigroupMap SemigroupMap::Identity(const FiniteSemigroup& s) {
  std::vector<Element> images(s.size());
  std::iota(images.begin(), images.end(), Element{0});
  return SemigroupMap(s, s, std::move(images));
}

bool SemigroupMap::is_automorphism() const {
  return is_bijective_ && is_homomorphism_ && source_ == target_;
}

SemigroupMap SemigroupMap::Then(const SemigroupMap& next) const {
  if (!(next.source_ == target_)) {
    throw Error(ErrorKind::kMismatchedBase,
                "composed maps do not share the middle semigroup");
  }
  std::vector<Element> images(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) {
    images[i] = next.images_[images_[i]];
  }
  return SemigroupMap(source_, next.target_, std::move(images));
}

SemigroupMap SemigroupMap::Inverse() const {
  if (!is_bijective_) {
    throw Error(ErrorKind::kNotAutomorphism, "map is not a bijection");
  }
  std::vector<Element> images(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) {
    images[images_[i]] = static_cast<Element>(i);
  }
  return SemigroupMap(target_, source_, std::move(images));
}

bool is_automorphism(const FiniteSemigroup& s,
                     std::span<const Element> images) {
  return IsPermutation(images, s.size()) && IsMultiplicative(s, s, images);
}

SemigroupMap extend_automorphism_to_zero(const FiniteSemigroup& s,
                                         const SemigroupMap& f) {
  if (!(f.source() == s) || !f.is_automorphism()) {
    throw Error(ErrorKind::kNotAutomorphism,
                "input is not an automorphism of the given semigroup");
  }
  const FiniteSemigroup s0 = adjoin_zero(s);
  std::vector<Element> images = f.images();
  images.push_back(static_cast<Element>(s.size()));
  return SemigroupMap(s0, s0, std::move(images));
}

}  // namespace brandt
