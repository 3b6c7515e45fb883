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

#ifndef BRANDT_ERRORS_HPP_
#define BRANDT_ERRORS_HPP_

#include <array>
#include <cstddef>
#include <stdexcept>
#include <string>

namespace brandt {

enum class ErrorKind {
  kNonAssociative,
  kBadIndex,
  kDuplicateLabel,
  kNotIdempotent,
  kNoIdentity,
  kNotAutomorphism,
  kBadCardinality,
  kNotMonoidWithZero,
  kOutOfRange,
  kNotAGroup,
  kInvalidTriple,
  kMismatchedBase,
  kBudgetExceeded,
  kDecompositionMismatch,
  kParse,
};

const char* ErrorKindName(ErrorKind kind);

// All library failures are reported through this type (or a subclass that
// carries extra payload). The kind decides the CLI exit code.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message);

  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

class NonAssociativeError : public Error {
 public:
  // (i*j)*k != i*(j*k)
  NonAssociativeError(std::size_t i, std::size_t j, std::size_t k);

  const std::array<std::size_t, 3>& witness() const { return witness_; }

 private:
  std::array<std::size_t, 3> witness_;
};

}  // namespace brandt

#endif  // BRANDT_ERRORS_HPP_
