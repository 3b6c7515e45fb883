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

#include "brandt/json_io.hpp"

#include <sstream>

#include "brandt/errors.hpp"

namespace brandt {

namespace {

Error ParseError(const std::string& what) { return Error(ErrorKind::kParse, what); }

std::string Images(const std::vector<Element>& images) {
  std::ostringstream out;
  out << "[";
  for (std::size_t i = 0; i < images.size(); ++i) {
    out << (i ? "," : "") << images[i];
  }
  out << "]";
  return out.str();
}

OrderedJson SubjectJson(const ReportSubject& s) {
  OrderedJson j;
  j["base"] = s.base;
  j["lambda"] = s.lambda;
  j["kind"] = s.kind;
  return j;
}

OrderedJson ZeroFixingJson(const ZeroFixingReport& r, bool timing) {
  OrderedJson j;
  j["subject"] = r.subject;
  j["carrier_size"] = r.carrier_size;
  j["bijections"] = r.bijections;
  j["automorphisms"] = r.automorphisms;
  j["non_automorphism"] = r.non_automorphism ? OrderedJson(*r.non_automorphism)
                                             : OrderedJson(nullptr);
  if (timing) j["elapsed_ms"] = r.elapsed_ms;
  return j;
}

}  // namespace

std::string semigroup_to_json(const FiniteSemigroup& s) {
  std::ostringstream out;
  out << "{\n";
  if (!s.name().empty()) {
    out << "  \"name\": " << nlohmann::json(s.name()).dump() << ",\n";
  }
  out << "  \"elements\": [";
  for (std::size_t i = 0; i < s.size(); ++i) {
    out << (i ? ", " : "") << nlohmann::json(s.labels()[i]).dump();
  }
  out << "],\n  \"table\": [\n";
  for (Element i = 0; i < s.size(); ++i) {
    out << "    [";
    for (Element j = 0; j < s.size(); ++j) {
      out << (j ? ", " : "") << s.product(i, j);
    }
    out << "]" << (i + 1 < s.size() ? "," : "") << "\n";
  }
  out << "  ]\n}\n";
  return out.str();
}

FiniteSemigroup semigroup_from_json(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(e.what());
  }
  if (!doc.is_object() || !doc.contains("elements") || !doc.contains("table")) {
    throw ParseError("expected an object with \"elements\" and \"table\"");
  }
  std::vector<std::string> labels;
  std::vector<std::vector<Element>> table;
  std::string name;
  try {
    labels = doc.at("elements").get<std::vector<std::string>>();
    for (const auto& row : doc.at("table")) {
      std::vector<Element> r;
      for (const auto& v : row) {
        if (!v.is_number_integer() || v.get<long long>() < 0) {
          throw ParseError("table entries must be non-negative integers");
        }
        r.push_back(v.get<Element>());
      }
      table.push_back(std::move(r));
    }
    if (doc.contains("name")) name = doc.at("name").get<std::string>();
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(e.what());
  }
  return FiniteSemigroup::FromTable(std::move(labels), std::move(table),
                                    std::move(name));
}

OrderedJson triple_to_json(const TripleGroup& group, const AutTriple& t) {
  OrderedJson j;
  j["phi"] = t.phi;
  j["h"] = t.h.images();
  OrderedJson u = OrderedJson::array();
  for (Element x : t.u) u.push_back(group.base().label(x));
  j["u"] = u;
  return j;
}

AutTriple triple_from_json(const TripleGroup& group, const nlohmann::json& j) {
  try {
    AutTriple t{j.at("phi").get<std::vector<std::size_t>>(),
                SemigroupMap::Identity(group.base()), {}};
    t.h = SemigroupMap(group.base(), group.base(),
                       j.at("h").get<std::vector<Element>>());
    for (const auto& label : j.at("u")) {
      const auto x = group.base().find_label(label.get<std::string>());
      if (!x) {
        throw Error(ErrorKind::kInvalidTriple,
                    "unknown unit label " + label.dump());
      }
      t.u.push_back(*x);
    }
    group.Validate(t);
    return t;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(e.what());
  }
}

OrderedJson report_to_json(const AutGroupReport& r, bool timing) {
  OrderedJson j;
  j["check"] = r.check;
  j["subject"] = SubjectJson(r.subject);
  j["oracle_order"] = r.oracle_order;
  j["structural_order"] = r.structural_order;
  j["match"] = r.match;
  j["kernel_size"] = r.kernel_size;
  j["triple_group_order"] = r.triple_group_order;
  if (r.witness) {
    OrderedJson w;
    w["side"] = r.witness->side;
    w["images"] = r.witness->images;
    j["witness"] = w;
  } else {
    j["witness"] = nullptr;
  }
  j["failures"] = r.failures;
  j["seed"] = r.seed;
  j["passed"] = r.passed();
  if (timing) j["elapsed_ms"] = r.elapsed_ms;
  return j;
}

OrderedJson report_to_json(const CompositionReport& r) {
  OrderedJson j;
  j["check"] = "composition-law";
  j["subject"] = SubjectJson(r.subject);
  j["trials"] = r.trials;
  j["failures"] = r.failures;
  j["seed"] = r.seed;
  j["passed"] = r.passed();
  return j;
}

OrderedJson report_to_json(const ZeroSemigroupExampleReport& r, bool timing) {
  OrderedJson j;
  j["check"] = "zero-semigroup";
  j["k"] = r.k;
  j["lambda"] = r.lambda;
  j["expected"] = r.expected;
  j["zero_semigroup"] = ZeroFixingJson(r.zero_semigroup, timing);
  j["monoid_contrast"] = r.monoid_contrast
                             ? ZeroFixingJson(*r.monoid_contrast, timing)
                             : OrderedJson(nullptr);
  j["passed"] = r.passed();
  return j;
}

std::string report_to_text(const AutGroupReport& r) {
  std::ostringstream out;
  out << r.check << " " << r.subject.base << " lambda=" << r.subject.lambda
      << ": " << (r.passed() ? "PASS" : "FAIL") << "\n"
      << "  oracle order      " << r.oracle_order << "\n"
      << "  structural order  " << r.structural_order << "\n"
      << "  triple group      " << r.triple_group_order << "\n"
      << "  kernel            " << r.kernel_size << "\n"
      << "  sets match        " << (r.match ? "yes" : "no") << "\n";
  if (r.witness) {
    out << "  witness (" << r.witness->side << ") " << Images(r.witness->images)
        << "\n";
  }
  for (const auto& f : r.failures) out << "  failure: " << f << "\n";
  return out.str();
}

std::string report_to_text(const CompositionReport& r) {
  std::ostringstream out;
  out << "composition-law " << r.subject.base << " lambda=" << r.subject.lambda
      << ": " << (r.passed() ? "PASS" : "FAIL") << " (" << r.trials
      << " trials, " << r.failures << " failures, seed " << r.seed << ")\n";
  return out.str();
}

std::string report_to_text(const ZeroSemigroupExampleReport& r) {
  std::ostringstream out;
  out << "zero-semigroup k=" << r.k << " lambda=" << r.lambda << ": "
      << (r.passed() ? "PASS" : "FAIL") << "\n"
      << "  carrier size         " << r.zero_semigroup.carrier_size << "\n"
      << "  zero-fixing maps     " << r.zero_semigroup.bijections << "\n"
      << "  automorphisms        " << r.zero_semigroup.automorphisms << "\n"
      << "  expected             " << r.expected << "\n";
  if (r.monoid_contrast) {
    out << "  contrast " << r.monoid_contrast->subject << ": "
        << r.monoid_contrast->automorphisms << " of "
        << r.monoid_contrast->bijections << " zero-fixing maps are automorphisms\n";
    if (r.monoid_contrast->non_automorphism) {
      out << "  non-automorphism     " << Images(*r.monoid_contrast->non_automorphism)
          << "\n";
    }
  }
  return out.str();
}

}  // namespace brandt
