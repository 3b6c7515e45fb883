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
#include <chrono>
#include <numeric>
#include <set>
#include <string>

#include "brandt/errors.hpp"
#include "brandt/oracle.hpp"

namespace brandt {

namespace {

using Clock = std::chrono::steady_clock;

double MillisecondsSince(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

std::uint64_t Factorial(std::size_t n) {
  std::uint64_t f = 1;
  for (std::size_t i = 2; i <= n; ++i) f *= i;
  return f;
}

std::string BaseName(const FiniteSemigroup& s) {
  return s.name().empty() ? "S" : s.name();
}

using ImageSet = std::set<std::vector<Element>>;

ImageSet OracleSet(const FiniteSemigroup& carrier, const OracleLimits& limits) {
  ImageSet out;
  for (const auto& m : enumerate_automorphisms(carrier, limits)) {
    out.insert(m.images());
  }
  return out;
}

// Fills match and witness from the two sets.
void CompareSets(const ImageSet& oracle, const ImageSet& structural,
                 AutGroupReport& report) {
  report.match = oracle == structural;
  if (report.match) return;
  for (const auto& images : oracle) {
    if (!structural.contains(images)) {
      report.witness = MapWitness{"oracle-only", images};
      return;
    }
  }
  for (const auto& images : structural) {
    if (!oracle.contains(images)) {
      report.witness = MapWitness{"structural-only", images};
      return;
    }
  }
}

bool IsIdentityMap(const SemigroupMap& m) {
  for (std::size_t i = 0; i < m.images().size(); ++i) {
    if (m.images()[i] != i) return false;
  }
  return true;
}

}  // namespace

bool permutes_maximal_idempotents(const FiniteSemigroup& carrier,
                                  const SemigroupMap& sigma) {
  const auto maximal = maximal_idempotents(carrier);
  std::vector<Element> images;
  for (Element e : maximal) images.push_back(sigma(e));
  std::sort(images.begin(), images.end());
  return images == maximal;
}

AutTriple decompose_automorphism(const TripleGroup& group,
                                 const SemigroupMap& sigma) {
  const BrandtSemigroup& b = group.extension();
  const FiniteSemigroup& s = group.base();
  if (!(sigma.source() == b.carrier()) || !sigma.is_automorphism()) {
    throw Error(ErrorKind::kNotAutomorphism,
                "not an automorphism of the extension's carrier");
  }
  auto mismatch = [](const std::string& what) {
    return Error(ErrorKind::kDecompositionMismatch, what);
  };
  const Element one = *s.identity();
  const std::size_t n = b.lambda();

  if (!permutes_maximal_idempotents(b.carrier(), sigma)) {
    throw mismatch("maximal idempotents are not permuted");
  }
  const auto pivot = b.decode(sigma(b.diagonal_identity(0)));
  if (!pivot || pivot->middle != one || pivot->row != pivot->col) {
    throw mismatch("(0, 1, 0) is not sent to a diagonal identity");
  }
  const std::size_t pivot_image = pivot->row;

  AutTriple t{std::vector<std::size_t>(n), SemigroupMap::Identity(s),
              std::vector<Element>(n)};
  for (std::size_t beta = 0; beta < n; ++beta) {
    const auto column = b.decode(sigma(b.encode(beta, one, 0)));
    if (!column || column->col != pivot_image) {
      throw mismatch("image of (" + std::to_string(beta) +
                     ", 1, 0) leaves the pivot column");
    }
    const auto row = b.decode(sigma(b.encode(0, one, beta)));
    if (!row || row->row != pivot_image || row->col != column->row) {
      throw mismatch("row and column images of " + std::to_string(beta) +
                     " disagree");
    }
    if (!group.units().contains(column->middle) ||
        group.units().inverse(column->middle) != row->middle) {
      throw mismatch("u(" + std::to_string(beta) + ") is not a unit");
    }
    t.phi[beta] = column->row;
    t.u[beta] = column->middle;
  }

  const Element u0 = t.u[0];
  const Element u0_inv = group.units().inverse(u0);
  std::vector<Element> h(s.size());
  h[*s.zero()] = *s.zero();
  for (Element x : b.nonzero_base()) {
    const auto image = b.decode(sigma(b.encode(0, x, 0)));
    if (!image || image->row != pivot_image || image->col != pivot_image) {
      throw mismatch("(0, s, 0) leaves the pivot cell");
    }
    h[x] = s.product(s.product(u0_inv, image->middle), u0);
  }
  t.h = SemigroupMap(s, s, std::move(h));
  if (!group.IsValid(t)) {
    throw mismatch("recovered components do not form a valid triple");
  }
  if (!(group.Realize(t) == sigma)) {
    throw mismatch("recovered triple does not reproduce the automorphism");
  }
  return t;
}

AutGroupReport verify_triple_parametrization(const FiniteSemigroup& s,
                                             std::size_t lambda,
                                             const OracleLimits& limits) {
  const auto start = Clock::now();
  AutGroupReport report;
  report.check = "triple-parametrization";
  report.subject = {BaseName(s), lambda, "brandt-extension"};

  const TripleGroup group(construct_brandt(s, lambda));
  const FiniteSemigroup& carrier = group.extension().carrier();
  report.kernel_size = group.KernelOrder();
  report.triple_group_order = group.TripleGroupOrder();
  report.structural_order = group.AutGroupOrder();

  ImageSet structural;
  std::size_t realized = 0;
  for (const AutTriple& t : group.EnumerateNormalized()) {
    SemigroupMap sigma = group.Realize(t);
    if (!sigma.is_automorphism()) {
      report.failures.push_back("a realized triple is not an automorphism");
    }
    structural.insert(sigma.images());
    ++realized;
  }
  if (structural.size() != realized) {
    report.failures.push_back("distinct normalized triples share a realization");
  }
  if (structural.size() != report.structural_order) {
    report.failures.push_back("normalized triple count disagrees with formula");
  }

  const auto oracle = enumerate_automorphisms(carrier, limits);
  report.oracle_order = oracle.size();
  ImageSet oracle_set;
  for (const SemigroupMap& sigma : oracle) {
    oracle_set.insert(sigma.images());
    if (!permutes_maximal_idempotents(carrier, sigma)) {
      report.failures.push_back("an automorphism moves a maximal idempotent off the diagonal");
      continue;
    }
    try {
      const AutTriple t = decompose_automorphism(group, sigma);
      if (!group.IsNormalized(t) || !(group.Realize(t) == sigma)) {
        report.failures.push_back("decomposition round trip failed");
      }
    } catch (const Error& e) {
      report.failures.push_back(e.what());
    }
  }
  CompareSets(oracle_set, structural, report);
  report.match = report.match && report.oracle_order == report.structural_order;
  report.elapsed_ms = MillisecondsSince(start);
  return report;
}

AutGroupReport verify_matrix_units(std::size_t lambda,
                                   const OracleLimits& limits) {
  const auto start = Clock::now();
  AutGroupReport report;
  report.check = "matrix-units";
  report.subject = {"I^0", lambda, "matrix-units"};
  const BrandtSemigroup b = matrix_units(lambda);
  const Element one = *b.base().identity();
  const auto autos = enumerate_automorphisms(b.carrier(), limits);
  report.oracle_order = autos.size();
  report.structural_order = Factorial(lambda);
  report.kernel_size = 1;
  report.triple_group_order = Factorial(lambda);

  std::set<std::vector<std::size_t>> phis;
  for (const SemigroupMap& sigma : autos) {
    std::vector<std::size_t> phi(lambda);
    bool diagonal = true;
    for (std::size_t a = 0; a < lambda && diagonal; ++a) {
      const auto c = b.decode(sigma(b.encode(a, one, a)));
      diagonal = c && c->row == c->col;
      if (diagonal) phi[a] = c->row;
    }
    bool of_form = diagonal && sigma(b.zero()) == b.zero();
    for (std::size_t a = 0; a < lambda && of_form; ++a) {
      for (std::size_t c = 0; c < lambda && of_form; ++c) {
        of_form = sigma(b.encode(a, one, c)) == b.encode(phi[a], one, phi[c]);
      }
    }
    if (!of_form) {
      report.failures.push_back("an automorphism is not induced by a permutation");
      if (!report.witness) report.witness = MapWitness{"oracle-only", sigma.images()};
    } else {
      phis.insert(phi);
    }
  }
  report.match = report.failures.empty() &&
                 report.oracle_order == report.structural_order &&
                 phis.size() == report.structural_order;
  report.elapsed_ms = MillisecondsSince(start);
  return report;
}

ZeroFixingReport count_zero_fixing_automorphisms(
    const FiniteSemigroup& carrier, const OracleLimits& limits) {
  const auto start = Clock::now();
  if (!carrier.zero()) {
    throw Error(ErrorKind::kNotMonoidWithZero, "carrier has no zero");
  }
  const std::size_t n = carrier.size();
  if (n > 21 || Factorial(n - 1) > limits.max_bijections) {
    throw Error(ErrorKind::kBudgetExceeded,
                std::to_string(n - 1) + "! bijections exceed the budget of " +
                    std::to_string(limits.max_bijections));
  }
  const Element zero = *carrier.zero();
  std::vector<Element> rest;
  for (Element x = 0; x < n; ++x) {
    if (x != zero) rest.push_back(x);
  }
  ZeroFixingReport report;
  report.subject = carrier.name();
  report.carrier_size = n;
  std::vector<Element> targets = rest;
  std::vector<Element> images(n);
  images[zero] = zero;
  do {
    for (std::size_t i = 0; i < rest.size(); ++i) images[rest[i]] = targets[i];
    ++report.bijections;
    if (is_automorphism(carrier, images)) {
      ++report.automorphisms;
    } else if (!report.non_automorphism) {
      report.non_automorphism = images;
    }
  } while (std::next_permutation(targets.begin(), targets.end()));
  report.elapsed_ms = MillisecondsSince(start);
  return report;
}

bool ZeroSemigroupExampleReport::passed() const {
  const bool all = zero_semigroup.bijections == expected &&
                   zero_semigroup.automorphisms == expected &&
                   !zero_semigroup.non_automorphism;
  const bool contrast =
      !monoid_contrast || (monoid_contrast->automorphisms <
                               monoid_contrast->bijections &&
                           monoid_contrast->non_automorphism.has_value());
  return all && contrast;
}

ZeroSemigroupExampleReport verify_zero_semigroup_example(
    std::size_t k, std::size_t lambda,
    const std::optional<FiniteSemigroup>& contrast,
    const OracleLimits& limits) {
  if (k < 3) {
    throw Error(ErrorKind::kBadCardinality,
                "the zero semigroup needs at least 3 elements");
  }
  if (lambda < 2) {
    throw Error(ErrorKind::kOutOfRange, "lambda must be at least 2");
  }
  ZeroSemigroupExampleReport report;
  report.k = k;
  report.lambda = lambda;
  report.expected = Factorial(lambda * lambda * (k - 1));
  const BrandtSemigroup b =
      construct_brandt_with_zero(construct_zero_semigroup(k), lambda);
  report.zero_semigroup = count_zero_fixing_automorphisms(b.carrier(), limits);
  if (contrast) {
    report.monoid_contrast = count_zero_fixing_automorphisms(
        construct_brandt(*contrast, lambda).carrier(), limits);
  }
  return report;
}

CompositionReport verify_composition_law(const TripleGroup& group,
                                         std::size_t trials,
                                         std::uint64_t seed) {
  CompositionReport report;
  report.subject = {BaseName(group.base()), group.lambda(), "brandt-extension"};
  report.trials = trials;
  report.seed = seed;
  std::mt19937_64 rng(seed);
  for (std::size_t i = 0; i < trials; ++i) {
    const AutTriple t = group.RandomTriple(rng);
    const AutTriple next = group.RandomTriple(rng);
    if (!(group.Realize(group.Compose(t, next)) ==
          group.Realize(t).Then(group.Realize(next)))) {
      ++report.failures;
    }
  }
  return report;
}

AutGroupReport verify_quotient_structure(const TripleGroup& group,
                                         std::uint64_t seed,
                                         const OracleLimits& limits) {
  const auto start = Clock::now();
  AutGroupReport report;
  report.check = "quotient-structure";
  report.subject = {BaseName(group.base()), group.lambda(), "brandt-extension"};
  report.seed = seed;
  report.triple_group_order = group.TripleGroupOrder();
  report.kernel_size = group.KernelOrder();
  report.structural_order = report.triple_group_order / report.kernel_size;

  const auto kernel = group.Kernel();
  if (kernel.size() != group.units().order()) {
    report.failures.push_back("kernel size differs from |H_1|");
  }
  for (const AutTriple& k : kernel) {
    if (!group.InKernel(k) || !IsIdentityMap(group.Realize(k))) {
      report.failures.push_back("a kernel element does not realize the identity");
    }
  }

  // Full triple set when affordable, otherwise a seeded sample.
  std::vector<AutTriple> triples;
  const bool full = report.triple_group_order <= limits.max_triples;
  if (full) {
    triples = group.EnumerateAll();
  } else {
    std::mt19937_64 rng(seed);
    for (int i = 0; i < 2000; ++i) triples.push_back(group.RandomTriple(rng));
  }
  ImageSet image;
  std::size_t kernel_hits = 0;
  for (const AutTriple& t : triples) {
    const SemigroupMap sigma = group.Realize(t);
    const bool trivial = IsIdentityMap(sigma);
    if (group.InKernel(t) != trivial) {
      report.failures.push_back("kernel membership disagrees with realization");
      break;
    }
    kernel_hits += trivial;
    image.insert(sigma.images());
    const AutTriple t_inv = group.Invert(t);
    for (const AutTriple& k : kernel) {
      if (!group.InKernel(group.Compose(group.Compose(t_inv, k), t))) {
        report.failures.push_back("kernel is not closed under conjugation");
        break;
      }
    }
  }
  if (full && kernel_hits != report.kernel_size) {
    report.failures.push_back("triples realizing the identity differ from the kernel");
  }

  const ImageSet oracle = OracleSet(group.extension().carrier(), limits);
  report.oracle_order = oracle.size();
  if (full) {
    CompareSets(oracle, image, report);
  } else {
    ImageSet normalized;
    for (const AutTriple& t : group.EnumerateNormalized()) {
      normalized.insert(group.Realize(t).images());
    }
    CompareSets(oracle, normalized, report);
  }
  const CompositionReport law = verify_composition_law(group, 200, seed);
  if (!law.passed()) {
    report.failures.push_back("realization is not a homomorphism");
  }
  report.match = report.match && report.oracle_order == report.structural_order;
  report.elapsed_ms = MillisecondsSince(start);
  return report;
}

}  // namespace brandt
