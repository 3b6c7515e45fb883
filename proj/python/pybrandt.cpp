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

// Python bindings for the semigroup, Brandt-extension, triple-group and
// oracle layers. Reports come back as plain dicts.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "brandt/aut_triples.hpp"
#include "brandt/brandt_extension.hpp"
#include "brandt/corpus.hpp"
#include "brandt/errors.hpp"
#include "brandt/json_io.hpp"
#include "brandt/oracle.hpp"
#include "brandt/semigroup.hpp"
#include "brandt/semigroup_map.hpp"

namespace py = pybind11;

namespace brandt {
namespace {

py::object ToPython(const OrderedJson& j) {
  return py::module_::import("json").attr("loads")(j.dump());
}

std::string Repr(const FiniteSemigroup& s) {
  std::ostringstream out;
  out << "<Semigroup";
  if (!s.name().empty()) out << " " << s.name();
  out << " of order " << s.size() << ">";
  return out.str();
}

}  // namespace
}  // namespace brandt

PYBIND11_MODULE(pybrandt, m) {
  using namespace brandt;
  m.doc() = "Brandt lambda^0-extensions of finite monoids with zero";

  // Owned by the module for the life of the interpreter.
  static py::handle error_type =
      PyErr_NewException("pybrandt.BrandtError", PyExc_ValueError, nullptr);
  m.attr("BrandtError") = error_type;
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      py::object exc = error_type(e.what());
      exc.attr("kind") = std::string(ErrorKindName(e.kind()));
      PyErr_SetObject(error_type.ptr(), exc.ptr());
    }
  });

  py::class_<FiniteSemigroup>(m, "Semigroup")
      .def(py::init([](std::vector<std::string> labels,
                       std::vector<std::vector<Element>> table, std::string name) {
             return FiniteSemigroup::FromTable(std::move(labels), std::move(table),
                                               std::move(name));
           }),
           py::arg("labels"), py::arg("table"), py::arg("name") = "")
      .def_property_readonly("size", &FiniteSemigroup::size)
      .def_property_readonly("labels", &FiniteSemigroup::labels)
      .def_property_readonly("name", &FiniteSemigroup::name)
      .def_property_readonly("zero", &FiniteSemigroup::zero)
      .def_property_readonly("identity", &FiniteSemigroup::identity)
      .def_property_readonly("table", &FiniteSemigroup::rows)
      .def("product", &FiniteSemigroup::product)
      .def("find_label", &FiniteSemigroup::find_label)
      .def("is_monoid_with_zero", &FiniteSemigroup::is_monoid_with_zero)
      .def("to_json", &semigroup_to_json)
      .def_static("from_json", [](const std::string& text) {
        return semigroup_from_json(text);
      })
      .def("__len__", &FiniteSemigroup::size)
      .def("__eq__", [](const FiniteSemigroup& a, const FiniteSemigroup& b) {
        return a == b;
      })
      .def("__repr__", &Repr);

  m.def("idempotents", &idempotents);
  m.def("maximal_idempotents", &maximal_idempotents);
  m.def("natural_leq", &natural_leq);
  m.def("idempotents_form_band", &idempotents_form_band);
  m.def("units", [](const FiniteSemigroup& s) { return unit_group(s).members(); });
  m.def("adjoin_zero", &adjoin_zero);
  m.def("adjoin_identity", &adjoin_identity);
  m.def("trivial_semigroup", &construct_trivial_semigroup);
  m.def("zero_semigroup", &construct_zero_semigroup, py::arg("k"));
  m.def("cyclic_group", &construct_cyclic_group, py::arg("m"));
  m.def("cyclic_group_with_zero", &construct_cyclic_group_with_zero, py::arg("m"));
  m.def("builtin", &builtin_semigroup, py::arg("name"));
  m.def("builtin_names", &builtin_names);

  py::class_<SemigroupMap>(m, "Map")
      .def_property_readonly("images", &SemigroupMap::images)
      .def_property_readonly("source", &SemigroupMap::source)
      .def("__call__", &SemigroupMap::operator())
      .def("is_automorphism", &SemigroupMap::is_automorphism)
      .def("then", &SemigroupMap::Then)
      .def("inverse", &SemigroupMap::Inverse)
      .def("__eq__", [](const SemigroupMap& a, const SemigroupMap& b) {
        return a == b;
      })
      .def("__repr__", [](const SemigroupMap& f) {
        std::string out = "<Map";
        for (Element x : f.images()) out += " " + std::to_string(x);
        return out + ">";
      });
  m.def("make_map", [](const FiniteSemigroup& s, std::vector<Element> images) {
    return SemigroupMap(s, s, std::move(images));
  });

  py::class_<BrandtSemigroup>(m, "Brandt")
      .def_property_readonly("base", &BrandtSemigroup::base)
      .def_property_readonly("lambda_", &BrandtSemigroup::lambda)
      .def_property_readonly("carrier", &BrandtSemigroup::carrier)
      .def("encode",
           py::overload_cast<std::size_t, Element, std::size_t>(
               &BrandtSemigroup::encode, py::const_),
           py::arg("row"), py::arg("middle"), py::arg("col"))
      .def("decode", [](const BrandtSemigroup& b, Element x) -> py::object {
        const auto c = b.decode(x);
        if (!c) return py::none();
        return py::make_tuple(c->row, c->middle, c->col);
      });
  m.def("construct_brandt",
        [](const FiniteSemigroup& s, std::size_t lambda, std::size_t max_lambda) {
          return construct_brandt(s, lambda, {.max_lambda = max_lambda});
        },
        py::arg("s"), py::arg("lambda_"), py::arg("max_lambda") = 6);
  m.def("matrix_units", [](std::size_t lambda) { return matrix_units(lambda); },
        py::arg("lambda_"));

  py::class_<AutTriple>(m, "Triple")
      .def_property_readonly("phi", [](const AutTriple& t) { return t.phi; })
      .def_property_readonly("h", [](const AutTriple& t) { return t.h.images(); })
      .def_property_readonly("u", [](const AutTriple& t) { return t.u; })
      .def("__eq__", [](const AutTriple& a, const AutTriple& b) { return a == b; });

  py::class_<TripleGroup>(m, "TripleGroup")
      .def(py::init<BrandtSemigroup>(), py::arg("extension"))
      .def_property_readonly("extension", &TripleGroup::extension)
      .def("triple",
           [](const TripleGroup& g, std::vector<std::size_t> phi,
              std::vector<Element> h, std::vector<Element> u) {
             AutTriple t{std::move(phi),
                         SemigroupMap(g.base(), g.base(), std::move(h)),
                         std::move(u)};
             g.Validate(t);
             return t;
           },
           py::arg("phi"), py::arg("h"), py::arg("u"))
      .def("identity", &TripleGroup::identity)
      .def("is_valid", &TripleGroup::IsValid)
      .def("realize", &TripleGroup::Realize)
      .def("compose", &TripleGroup::Compose)
      .def("invert", &TripleGroup::Invert)
      .def("normalize", &TripleGroup::Normalize)
      .def("in_kernel", &TripleGroup::InKernel)
      .def("kernel", &TripleGroup::Kernel)
      .def("enumerate_normalized", &TripleGroup::EnumerateNormalized)
      .def("random_triple",
           [](const TripleGroup& g, std::uint64_t seed, std::size_t count) {
             std::mt19937_64 rng(seed);
             std::vector<AutTriple> out;
             for (std::size_t i = 0; i < count; ++i) out.push_back(g.RandomTriple(rng));
             return out;
           },
           py::arg("seed"), py::arg("count") = 1)
      .def("triple_group_order", &TripleGroup::TripleGroupOrder)
      .def("kernel_order", &TripleGroup::KernelOrder)
      .def("aut_group_order", &TripleGroup::AutGroupOrder)
      .def("to_json", [](const TripleGroup& g, const AutTriple& t) {
        return ToPython(triple_to_json(g, t));
      })
      .def("decompose", [](const TripleGroup& g, const SemigroupMap& sigma) {
        return decompose_automorphism(g, sigma);
      });

  m.def("enumerate_automorphisms",
        [](const FiniteSemigroup& s, std::size_t max_elements) {
          return enumerate_automorphisms(s, {.max_elements = max_elements});
        },
        py::arg("s"), py::arg("max_elements") = 32);
  m.def("find_isomorphism",
        [](const FiniteSemigroup& a, const FiniteSemigroup& b) {
          return find_isomorphism(a, b);
        });

  m.def("verify_triple_parametrization",
        [](const FiniteSemigroup& s, std::size_t lambda) {
          return ToPython(report_to_json(verify_triple_parametrization(s, lambda)));
        },
        py::arg("s"), py::arg("lambda_"));
  m.def("verify_matrix_units", [](std::size_t lambda) {
    return ToPython(report_to_json(verify_matrix_units(lambda)));
  }, py::arg("lambda_"));
  m.def("verify_zero_semigroup_example",
        [](std::size_t k, std::size_t lambda, bool contrast) {
          std::optional<FiniteSemigroup> base;
          if (contrast) base = construct_cyclic_group_with_zero(2);
          return ToPython(
              report_to_json(verify_zero_semigroup_example(k, lambda, base)));
        },
        py::arg("k") = 3, py::arg("lambda_") = 2, py::arg("contrast") = true);
  m.def("verify_composition_law",
        [](const TripleGroup& g, std::size_t trials, std::uint64_t seed) {
          return ToPython(report_to_json(verify_composition_law(g, trials, seed)));
        },
        py::arg("group"), py::arg("trials") = 500, py::arg("seed") = kDefaultSeed);
  m.def("verify_quotient_structure",
        [](const TripleGroup& g, std::uint64_t seed) {
          return ToPython(report_to_json(verify_quotient_structure(g, seed)));
        },
        py::arg("group"), py::arg("seed") = kDefaultSeed);
}
