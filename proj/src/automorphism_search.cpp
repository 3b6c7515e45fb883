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

#include <algorithm>
#include <string>
#include <tuple>

#include "brandt/errors.hpp"
#include "brandt/oracle.hpp"

namespace brandt {

namespace {

struct Signature {
  bool is_zero = false;
  bool is_identity = false;
  bool idempotent = false;
  bool maximal = false;
  std::size_t index = 0;
  std::size_t period = 0;
  int left_annihilated = -1;
  int right_annihilated = -1;
  std::size_t left_fixed = 0;
  std::size_t right_fixed = 0;

  friend bool operator==(const Signature&, const Signature&) = default;
};

std::vector<Signature> Signatures(const FiniteSemigroup& s) {
  const std::size_t n = s.size();
  std::vector<Signature> out(n);
  for (Element e : maximal_idempotents(s)) out[e].maximal = true;
  for (Element x = 0; x < n; ++x) {
    Signature& sig = out[x];
    sig.is_zero = s.zero() == x;
    sig.is_identity = s.identity() == x;
    sig.idempotent = is_idempotent(s, x);
    // powers x, x^2, ... until the first repeat
    std::vector<int> seen(n, -1);
    Element p = x;
    std::size_t k = 1;
    while (seen[p] < 0) {
      seen[p] = static_cast<int>(k);
      p = s.product(p, x);
      ++k;
    }
    sig.index = static_cast<std::size_t>(seen[p]);
    sig.period = k - sig.index;
    if (s.zero()) {
      sig.left_annihilated = 0;
      sig.right_annihilated = 0;
    }
    for (Element y = 0; y < n; ++y) {
      if (s.zero()) {
        sig.left_annihilated += s.product(x, y) == *s.zero();
        sig.right_annihilated += s.product(y, x) == *s.zero();
      }
      sig.left_fixed += s.product(x, y) == x;
      sig.right_fixed += s.product(y, x) == x;
    }
  }
  return out;
}

class MorphismSearch {
 public:
  MorphismSearch(const FiniteSemigroup& source, const FiniteSemigroup& target,
                 std::uint64_t max_results, bool stop_at_first)
      : source_(source),
        target_(target),
        source_sig_(Signatures(source)),
        target_sig_(Signatures(target)),
        image_(source.size(), -1),
        preimage_(target.size(), -1),
        max_results_(max_results),
        stop_at_first_(stop_at_first) {
    const std::size_t n = source.size();
    for (Element x = 0; x < n; ++x) {
      if (source_sig_[x].maximal) order_.push_back(x);
    }
    for (Element x = 0; x < n; ++x) {
      if (source_sig_[x].idempotent && !source_sig_[x].maximal) {
        order_.push_back(x);
      }
    }
    for (Element x = 0; x < n; ++x) {
      if (!source_sig_[x].idempotent) order_.push_back(x);
    }
  }

  std::vector<std::vector<Element>> Run() {
    if (source_.size() != target_.size()) return {};
    auto pin = [&](std::optional<Element> a, std::optional<Element> b) {
      if (a.has_value() != b.has_value()) return false;
      return !a || Assign(*a, *b);
    };
    if (pin(source_.zero(), target_.zero()) &&
        pin(source_.identity(), target_.identity())) {
      Recurse(0);
    }
    std::sort(results_.begin(), results_.end());
    return std::move(results_);
  }

 private:
  bool Set(Element x, Element y) {
    if (image_[x] >= 0) return image_[x] == static_cast<int>(y);
    if (preimage_[y] >= 0 || !(source_sig_[x] == target_sig_[y])) return false;
    image_[x] = static_cast<int>(y);
    preimage_[y] = static_cast<int>(x);
    trail_.push_back(x);
    return true;
  }

  // Assigns x -> y and closes the partial map under products.
  bool Assign(Element x, Element y) {
    std::size_t head = trail_.size();
    if (!Set(x, y)) return false;
    while (head < trail_.size()) {
      const Element a = trail_[head];
      ++head;
      for (std::size_t i = 0; i < head; ++i) {
        const Element b = trail_[i];
        const auto ia = static_cast<Element>(image_[a]);
        const auto ib = static_cast<Element>(image_[b]);
        if (!Set(source_.product(a, b), target_.product(ia, ib)) ||
            !Set(source_.product(b, a), target_.product(ib, ia))) {
          return false;
        }
      }
    }
    return true;
  }

  void Undo(std::size_t mark) {
    while (trail_.size() > mark) {
      const Element x = trail_.back();
      trail_.pop_back();
      preimage_[static_cast<std::size_t>(image_[x])] = -1;
      image_[x] = -1;
    }
  }

  bool Done() const { return stop_at_first_ && !results_.empty(); }

  void Recurse(std::size_t pos) {
    while (pos < order_.size() && image_[order_[pos]] >= 0) ++pos;
    if (pos == order_.size()) {
      std::vector<Element> images(image_.begin(), image_.end());
      results_.push_back(std::move(images));
      if (results_.size() > max_results_) {
        throw Error(ErrorKind::kBudgetExceeded,
                    "more than " + std::to_string(max_results_) +
                        " automorphisms");
      }
      return;
    }
    const Element x = order_[pos];
    for (Element y = 0; y < target_.size() && !Done(); ++y) {
      if (preimage_[y] >= 0) continue;
      const std::size_t mark = trail_.size();
      if (Assign(x, y)) Recurse(pos + 1);
      Undo(mark);
    }
  }

  const FiniteSemigroup& source_;
  const FiniteSemigroup& target_;
  std::vector<Signature> source_sig_;
  std::vector<Signature> target_sig_;
  std::vector<int> image_;
  std::vector<int> preimage_;
  std::vector<Element> trail_;
  std::vector<Element> order_;
  std::vector<std::vector<Element>> results_;
  std::uint64_t max_results_;
  bool stop_at_first_;
};

}  // namespace

std::vector<SemigroupMap> enumerate_automorphisms(const FiniteSemigroup& t,
                                                  const OracleLimits& limits) {
  if (t.size() > limits.max_elements) {
    throw Error(ErrorKind::kBudgetExceeded,
                std::to_string(t.size()) + " elements exceed the oracle limit of " +
                    std::to_string(limits.max_elements));
  }
  MorphismSearch search(t, t, limits.max_automorphisms, false);
  std::vector<SemigroupMap> out;
  for (auto& images : search.Run()) out.emplace_back(t, t, std::move(images));
  return out;
}

std::optional<SemigroupMap> find_isomorphism(const FiniteSemigroup& a,
                                             const FiniteSemigroup& b) {
  MorphismSearch search(a, b, 1, true);
  auto found = search.Run();
  if (found.empty()) return std::nullopt;
  return SemigroupMap(a, b, std::move(found.front()));
}

}  // namespace brandt
