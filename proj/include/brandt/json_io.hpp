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

#ifndef BRANDT_JSON_IO_HPP_
#define BRANDT_JSON_IO_HPP_

#include <string>
#include <string_view>

#include "brandt/aut_triples.hpp"
#include "brandt/oracle.hpp"
#include "brandt/semigroup.hpp"
#include "json.hpp"

namespace brandt {

using OrderedJson = nlohmann::ordered_json;

// Cayley-table document:
//   { "name": "...", "elements": [label, ...], "table": [[int, ...], ...] }
// "name" is written only when non-empty. Output is byte-stable: fixed key
// order, one table row per line, trailing newline.
std::string semigroup_to_json(const FiniteSemigroup& s);

// Throws Error(kParse) for malformed JSON or a wrong document shape; the
// table itself is validated by FiniteSemigroup::FromTable.
FiniteSemigroup semigroup_from_json(std::string_view text);

// { "phi": [int, ...], "h": [int, ...], "u": [label, ...] }
OrderedJson triple_to_json(const TripleGroup& group, const AutTriple& t);
AutTriple triple_from_json(const TripleGroup& group, const nlohmann::json& j);

OrderedJson report_to_json(const AutGroupReport& r, bool timing = false);
OrderedJson report_to_json(const CompositionReport& r);
OrderedJson report_to_json(const ZeroSemigroupExampleReport& r,
                           bool timing = false);

std::string report_to_text(const AutGroupReport& r);
std::string report_to_text(const CompositionReport& r);
std::string report_to_text(const ZeroSemigroupExampleReport& r);

}  // namespace brandt

#endif  // BRANDT_JSON_IO_HPP_
