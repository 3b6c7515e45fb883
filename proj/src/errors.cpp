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

#include "brandt/errors.hpp"

namespace brandt {

const char* ErrorKindName(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kNonAssociative: return "NonAssociative";
    case ErrorKind::kBadIndex: return "BadIndex";
    case ErrorKind::kDuplicateLabel: return "DuplicateLabel";
    case ErrorKind::kNotIdempotent: return "NotIdempotent";
    case ErrorKind::kNoIdentity: return "NoIdentity";
    case ErrorKind::kNotAutomorphism: return "NotAutomorphism";
    case ErrorKind::kBadCardinality: return "BadCardinality";
    case ErrorKind::kNotMonoidWithZero: return "NotMonoidWithZero";
    case ErrorKind::kOutOfRange: return "OutOfRange";
    case ErrorKind::kNotAGroup: return "NotAGroup";
    case ErrorKind::kInvalidTriple: return "InvalidTriple";
    case ErrorKind::kMismatchedBase: return "MismatchedBase";
    case ErrorKind::kBudgetExceeded: return "BudgetExceeded";
    case ErrorKind::kDecompositionMismatch: return "DecompositionMismatch";
    case ErrorKind::kParse: return "ParseError";
  }
  return "Unknown";
}

Error::Error(ErrorKind kind, const std::string& message)
    : std::runtime_error(std::string(ErrorKindName(kind)) + ": " + message),
      kind_(kind) {}

NonAssociativeError::NonAssociativeError(std::size_t i, std::size_t j,
                                         std::size_t k)
    : Error(ErrorKind::kNonAssociative,
            "(" + std::to_string(i) + "*" + std::to_string(j) + ")*" +
                std::to_string(k) + " != " + std::to_string(i) + "*(" +
                std::to_string(j) + "*" + std::to_string(k) + ")"),
      witness_{i, j, k} {}

}  // namespace brandt
