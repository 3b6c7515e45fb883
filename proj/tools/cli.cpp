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

#include "cli.hpp"

#include <fstream>
#include <functional>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "brandt/aut_triples.hpp"
#include "brandt/brandt_extension.hpp"
#include "brandt/corpus.hpp"
#include "brandt/errors.hpp"
#include "brandt/json_io.hpp"
#include "brandt/oracle.hpp"

namespace brandt::cli {

namespace {

struct Config {
  std::string format = "text";
  std::uint64_t seed = kDefaultSeed;
  std::size_t budget = OracleLimits{}.max_elements;
  std::uint64_t bijection_budget = OracleLimits{}.max_bijections;
  std::string output;
  bool timing = false;

  std::string input;
  std::string builtin;
  std::size_t lambda = 1;
  std::string method = "both";

  std::string suite;
  std::string corpus = "builtin";
  std::size_t max_lambda = 0;
  std::size_t k = 3;
  std::size_t trials = 500;
  std::string contrast = "z2-0";

  std::vector<std::string> triples;

  bool json() const { return format == "json"; }

  OracleLimits limits() const {
    OracleLimits l;
    l.max_elements = budget;
    l.max_bijections = bijection_budget;
    return l;
  }
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string ReadFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::kParse, "cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

FiniteSemigroup LoadInput(const Config& c) {
  if (!c.builtin.empty()) {
    auto s = builtin_semigroup(c.builtin);
    if (!s) throw UsageError("unknown builtin '" + c.builtin + "'");
    return *s;
  }
  if (c.input.empty()) throw UsageError("an input file or --builtin is required");
  return semigroup_from_json(ReadFile(c.input));
}

class Output {
 public:
  Output(const Config& c, std::ostream& out) : config_(c), out_(out) {}

  void Write(const std::string& text) {
    if (config_.output.empty()) {
      out_ << text;
      return;
    }
    std::ofstream file(config_.output);
    if (!file) throw Error(ErrorKind::kParse, "cannot write " + config_.output);
    file << text;
  }

  void Write(const OrderedJson& j) { Write(j.dump(2) + "\n"); }

 private:
  const Config& config_;
  std::ostream& out_;
};

std::string JoinLabels(const FiniteSemigroup& s, const std::vector<Element>& xs) {
  std::string out = "{";
  for (std::size_t i = 0; i < xs.size(); ++i) {
    out += (i ? "," : "") + s.label(xs[i]);
  }
  return out + "}";
}

std::string Kind(const FiniteSemigroup& s) {
  if (s.is_monoid_with_zero()) return "monoid with zero";
  if (s.identity() && s.zero()) return "trivial monoid";
  if (s.identity()) return "monoid";
  if (s.zero()) return "semigroup with zero";
  return "semigroup";
}

int CmdValidate(const Config& c, Output& out) {
  const FiniteSemigroup s = LoadInput(c);
  const auto es = idempotents(s);
  const auto maximal = maximal_idempotents(s);
  const auto order = natural_order_pairs(s);
  std::optional<UnitGroup> units;
  if (s.identity()) units.emplace(s);

  if (c.json()) {
    OrderedJson j;
    j["name"] = s.name();
    j["size"] = s.size();
    j["kind"] = Kind(s);
    j["zero"] = s.zero() ? OrderedJson(s.label(*s.zero())) : OrderedJson(nullptr);
    j["identity"] =
        s.identity() ? OrderedJson(s.label(*s.identity())) : OrderedJson(nullptr);
    OrderedJson u = nullptr;
    if (units) {
      u = OrderedJson::array();
      for (Element x : units->members()) u.push_back(s.label(x));
    }
    j["units"] = u;
    OrderedJson e = OrderedJson::array();
    for (Element x : es) e.push_back(s.label(x));
    j["idempotents"] = e;
    OrderedJson m = OrderedJson::array();
    for (Element x : maximal) m.push_back(s.label(x));
    j["maximal_idempotents"] = m;
    OrderedJson po = OrderedJson::array();
    for (auto [a, b] : order) po.push_back({s.label(a), s.label(b)});
    j["natural_order"] = po;
    j["band"] = idempotents_form_band(s);
    out.Write(j);
    return kOk;
  }
  std::ostringstream text;
  text << Kind(s);
  if (units) text << "; H1 = " << JoinLabels(s, units->members());
  text << "; E = " << JoinLabels(s, es) << "\n";
  text << "  size " << s.size();
  if (s.zero()) text << ", zero " << s.label(*s.zero());
  if (s.identity()) text << ", identity " << s.label(*s.identity());
  text << "\n  maximal idempotents " << JoinLabels(s, maximal) << "\n";
  for (auto [a, b] : order) {
    text << "  " << s.label(a) << " < " << s.label(b) << "\n";
  }
  text << "  idempotents form a band: " << (idempotents_form_band(s) ? "yes" : "no")
       << "\n";
  out.Write(text.str());
  return kOk;
}

int CmdExtend(const Config& c, Output& out) {
  const FiniteSemigroup s = LoadInput(c);
  out.Write(semigroup_to_json(construct_brandt(s, c.lambda).carrier()));
  return kOk;
}

int CmdAdjoin(const Config& c, Output& out, bool zero) {
  const FiniteSemigroup s = LoadInput(c);
  out.Write(semigroup_to_json(zero ? adjoin_zero(s) : adjoin_identity(s)));
  return kOk;
}

int CmdAut(const Config& c, Output& out) {
  const FiniteSemigroup s = LoadInput(c);
  if (c.method == "both") {
    const AutGroupReport r =
        verify_triple_parametrization(s, c.lambda, c.limits());
    out.Write(c.json() ? report_to_json(r, c.timing).dump(2) + "\n"
                       : report_to_text(r));
    return r.passed() ? kOk : kMismatch;
  }
  OrderedJson j;
  j["base"] = s.name();
  j["lambda"] = c.lambda;
  j["method"] = c.method;
  std::ostringstream text;
  if (c.method == "triples") {
    const TripleGroup group(construct_brandt(s, c.lambda));
    const auto normalized = group.EnumerateNormalized();
    j["order"] = normalized.size();
    j["triple_group_order"] = group.TripleGroupOrder();
    j["kernel_size"] = group.KernelOrder();
    j["base_automorphisms"] = group.base_automorphisms().size();
    j["units"] = group.units().order();
    text << "order " << normalized.size() << " (triples " << group.TripleGroupOrder()
         << ", kernel " << group.KernelOrder() << ")\n";
  } else {
    const BrandtSemigroup b = s.identity() ? construct_brandt(s, c.lambda)
                                           : construct_brandt_with_zero(s, c.lambda);
    const auto autos = enumerate_automorphisms(b.carrier(), c.limits());
    j["order"] = autos.size();
    j["carrier_size"] = b.carrier().size();
    text << "order " << autos.size() << " (carrier " << b.carrier().size()
         << " elements)\n";
  }
  out.Write(c.json() ? j.dump(2) + "\n" : text.str());
  return kOk;
}

struct SuiteResult {
  OrderedJson reports = OrderedJson::array();
  std::string text;
  bool passed = true;
};

std::vector<CorpusEntry> SuiteCorpus(const Config& c) {
  if (!c.builtin.empty() || !c.input.empty()) {
    const FiniteSemigroup s = LoadInput(c);
    return {{s.name().empty() ? "input" : s.name(), s}};
  }
  if (c.corpus != "builtin") throw UsageError("unknown corpus '" + c.corpus + "'");
  return builtin_corpus();
}

std::size_t CarrierSize(const FiniteSemigroup& s, std::size_t lambda) {
  return lambda * lambda * (s.size() - 1) + 1;
}

template <typename Report>
void Add(SuiteResult& result, const Report& r, const Config& c) {
  if constexpr (std::is_same_v<Report, CompositionReport>) {
    result.reports.push_back(report_to_json(r));
  } else {
    result.reports.push_back(report_to_json(r, c.timing));
  }
  result.text += report_to_text(r);
  result.passed = result.passed && r.passed();
}

void SuiteTripleParametrization(const Config& c, SuiteResult& result) {
  const std::size_t max_lambda = c.max_lambda ? c.max_lambda : 3;
  for (const CorpusEntry& e : SuiteCorpus(c)) {
    for (std::size_t lambda = 1; lambda <= max_lambda; ++lambda) {
      if (CarrierSize(e.monoid, lambda) > c.budget) continue;
      Add(result, verify_triple_parametrization(e.monoid, lambda, c.limits()), c);
    }
  }
}

void SuiteMatrixUnits(const Config& c, SuiteResult& result) {
  const std::size_t max_lambda = c.max_lambda ? c.max_lambda : 4;
  std::string orders;
  for (std::size_t lambda = 1; lambda <= max_lambda; ++lambda) {
    const AutGroupReport r = verify_matrix_units(lambda, c.limits());
    Add(result, r, c);
    orders += (lambda > 1 ? "," : "") + std::to_string(r.oracle_order);
  }
  result.text += "orders " + orders + "\n";
}

void SuiteZeroSemigroup(const Config& c, SuiteResult& result) {
  std::optional<FiniteSemigroup> contrast;
  if (!c.contrast.empty() && c.contrast != "none") {
    contrast = builtin_semigroup(c.contrast);
    if (!contrast) throw UsageError("unknown contrast '" + c.contrast + "'");
  }
  const std::size_t lambda = c.max_lambda ? c.max_lambda : 2;
  Add(result,
      verify_zero_semigroup_example(c.k, c.lambda > 1 ? c.lambda : lambda,
                                    contrast, c.limits()),
      c);
}

void SuiteCompositionLaw(const Config& c, SuiteResult& result) {
  const std::size_t max_lambda = c.max_lambda ? c.max_lambda : 3;
  for (const CorpusEntry& e : SuiteCorpus(c)) {
    for (std::size_t lambda = 1; lambda <= max_lambda; ++lambda) {
      if (CarrierSize(e.monoid, lambda) > c.budget) continue;
      const TripleGroup group(construct_brandt(e.monoid, lambda));
      Add(result, verify_composition_law(group, c.trials, c.seed), c);
    }
  }
}

void SuiteQuotient(const Config& c, SuiteResult& result) {
  const std::size_t max_lambda = c.max_lambda ? c.max_lambda : 3;
  for (const CorpusEntry& e : SuiteCorpus(c)) {
    for (std::size_t lambda = 1; lambda <= max_lambda; ++lambda) {
      if (CarrierSize(e.monoid, lambda) > c.budget) continue;
      const TripleGroup group(construct_brandt(e.monoid, lambda));
      Add(result, verify_quotient_structure(group, c.seed, c.limits()), c);
    }
  }
}

using Suite = std::function<void(const Config&, SuiteResult&)>;

const std::map<std::string, Suite>& Suites() {
  static const std::map<std::string, Suite> suites = {
      {"theorem-3-1", SuiteTripleParametrization},
      {"triple-parametrization", SuiteTripleParametrization},
      {"corollary-3-3", SuiteMatrixUnits},
      {"matrix-units", SuiteMatrixUnits},
      {"example-3-4", SuiteZeroSemigroup},
      {"zero-semigroup", SuiteZeroSemigroup},
      {"lemma-3-6", SuiteCompositionLaw},
      {"composition-law", SuiteCompositionLaw},
      {"theorem-3-7", SuiteQuotient},
      {"quotient-structure", SuiteQuotient},
  };
  return suites;
}

int CmdVerify(const Config& c, Output& out) {
  SuiteResult result;
  if (c.suite == "all") {
    for (const char* name : {"triple-parametrization", "matrix-units",
                             "zero-semigroup", "composition-law",
                             "quotient-structure"}) {
      Suites().at(name)(c, result);
    }
  } else {
    auto it = Suites().find(c.suite);
    if (it == Suites().end()) throw UsageError("unknown suite '" + c.suite + "'");
    it->second(c, result);
  }
  if (c.json()) {
    OrderedJson j;
    j["suite"] = c.suite;
    j["seed"] = c.seed;
    j["passed"] = result.passed;
    j["reports"] = result.reports;
    out.Write(j);
  } else {
    out.Write(result.text + (result.passed ? "PASS\n" : "FAIL\n"));
  }
  return result.passed ? kOk : kMismatch;
}

AutTriple LoadTriple(const TripleGroup& group, const std::string& path) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(ReadFile(path));
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorKind::kParse, e.what());
  }
  return triple_from_json(group, j);
}

int CmdTriple(const Config& c, Output& out, const std::string& op) {
  const TripleGroup group(construct_brandt(LoadInput(c), c.lambda));
  const std::size_t needed = op == "compose" ? 2 : 1;
  if (c.triples.size() != needed) {
    throw UsageError(op + " takes " + std::to_string(needed) + " triple file(s)");
  }
  const AutTriple t = LoadTriple(group, c.triples[0]);
  if (op == "realize") {
    const SemigroupMap sigma = group.Realize(t);
    const FiniteSemigroup& carrier = group.extension().carrier();
    if (c.json()) {
      OrderedJson j;
      j["images"] = sigma.images();
      out.Write(j);
    } else {
      std::string text;
      for (Element x = 0; x < carrier.size(); ++x) {
        text += carrier.label(x) + " -> " + carrier.label(sigma(x)) + "\n";
      }
      out.Write(text);
    }
    return kOk;
  }
  const AutTriple result = op == "compose"
                               ? group.Compose(t, LoadTriple(group, c.triples[1]))
                               : group.Invert(t);
  out.Write(triple_to_json(group, result));
  return kOk;
}

int ExitCodeFor(const Error& e) {
  switch (e.kind()) {
    case ErrorKind::kParse: return kParseError;
    case ErrorKind::kBudgetExceeded: return kBudgetExceeded;
    case ErrorKind::kDecompositionMismatch: return kMismatch;
    default: return kInvalidInput;
  }
}

}  // namespace

int Run(int argc, const char* const* argv, std::ostream& out,
        std::ostream& err) {
  Config c;
  CLI::App app{"Brandt lambda^0-extensions of finite monoids with zero and "
               "their automorphism groups"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--format", c.format, "Output format")
      ->check(CLI::IsMember({"json", "text"}));
  app.add_option("--seed", c.seed, "Seed for randomized trials");
  app.add_option("--budget", c.budget,
                 "Largest carrier the brute-force search accepts");
  app.add_option("--bijection-budget", c.bijection_budget,
                 "Largest number of zero-fixing bijections to scan");
  app.add_option("-o,--output", c.output, "Write the result to this file");
  app.add_flag("--timing", c.timing, "Include timings in JSON reports");

  auto add_input = [&](CLI::App* sub) {
    sub->add_option("input", c.input, "Cayley-table JSON file");
    sub->add_option("--builtin", c.builtin, "Built-in semigroup name");
  };

  auto* validate = app.add_subcommand("validate", "Check a Cayley table and describe it");
  add_input(validate);

  auto* extend = app.add_subcommand("extend", "Write the Brandt extension as a Cayley table");
  add_input(extend);
  extend->add_option("-l,--lambda", c.lambda, "Index set size")->required();

  auto* adjoin_zero_cmd = app.add_subcommand("adjoin-zero", "Append a fresh zero");
  add_input(adjoin_zero_cmd);
  auto* adjoin_identity_cmd =
      app.add_subcommand("adjoin-identity", "Append a fresh identity");
  add_input(adjoin_identity_cmd);

  auto* aut = app.add_subcommand("aut", "Automorphism group of the Brandt extension");
  add_input(aut);
  aut->add_option("-l,--lambda", c.lambda, "Index set size")->required();
  aut->add_option("--method", c.method, "Engine")
      ->check(CLI::IsMember({"triples", "brute", "both"}));

  auto* verify = app.add_subcommand("verify", "Run a verification suite");
  verify->add_option("suite", c.suite, "Suite name, or 'all'")->required();
  verify->add_option("--input", c.input, "Run on this Cayley-table file only");
  verify->add_option("--builtin", c.builtin, "Run on this built-in only");
  verify->add_option("--corpus", c.corpus, "Corpus name");
  verify->add_option("--max-lambda", c.max_lambda, "Largest lambda to check");
  verify->add_option("--k", c.k, "Zero semigroup cardinality");
  verify->add_option("--lambda", c.lambda, "Lambda for the zero-semigroup suite");
  verify->add_option("--trials", c.trials, "Random pairs per extension");
  verify->add_option("--contrast", c.contrast,
                     "Monoid whose extension must have a non-automorphic "
                     "zero-fixing bijection ('none' to skip)");

  std::vector<CLI::App*> triple_cmds;
  for (const char* op : {"realize", "compose", "invert"}) {
    auto* sub = app.add_subcommand(op, std::string(op) + " automorphism triples");
    sub->add_option("--input", c.input, "Cayley-table JSON file of the base");
    sub->add_option("--builtin", c.builtin, "Built-in base");
    sub->add_option("-l,--lambda", c.lambda, "Index set size")->required();
    sub->add_option("triples", c.triples, "Triple JSON file(s)")->required();
    triple_cmds.push_back(sub);
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kParseError;
  }

  try {
    Output output(c, out);
    if (validate->parsed()) return CmdValidate(c, output);
    if (extend->parsed()) return CmdExtend(c, output);
    if (adjoin_zero_cmd->parsed()) return CmdAdjoin(c, output, true);
    if (adjoin_identity_cmd->parsed()) return CmdAdjoin(c, output, false);
    if (aut->parsed()) return CmdAut(c, output);
    if (verify->parsed()) return CmdVerify(c, output);
    for (auto* sub : triple_cmds) {
      if (sub->parsed()) return CmdTriple(c, output, sub->get_name());
    }
  } catch (const NonAssociativeError& e) {
    const auto& w = e.witness();
    err << "error: " << e.what() << "\nwitness: [" << w[0] << ", " << w[1]
        << ", " << w[2] << "]\n";
    return kInvalidInput;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return ExitCodeFor(e);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kParseError;
  }
  return kParseError;
}

}  // namespace brandt::cli
