// Copyright 2026 The qpk Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "qpk/scenario.hpp"

#include <fstream>
#include <iomanip>
#include <sstream>

#include "qpk/errors.hpp"
#include "qpk/family_json.hpp"

namespace qpk {

namespace {

using nlohmann::json;

[[noreturn]] void schema_fail(const std::string& path, const std::string& what) {
  throw SchemaError(path + ": " + what);
}

ComplexRational parse_coefficient(const json& value, const std::string& path) {
  if (!value.is_string()) {
    schema_fail(path, "coefficients are scalar strings such as \"-1\" or \"1/2+i\"");
  }
  try {
    return parse_scalar(value.get<std::string>());
  } catch (const ParseError& e) {
    schema_fail(path, e.what());
  }
}

StateVector parse_coeff_map(const FamilyPtr& family, const json& map, const std::string& path) {
  if (!map.is_object()) {
    schema_fail(path, "expected an object of configuration name to scalar");
  }
  std::vector<ComplexRational> coeffs(family->size());
  for (const auto& [name, value] : map.items()) {
    const auto index = family->index_of(name);
    if (!index) {
      schema_fail(path + "." + name, "no configuration with this name");
    }
    coeffs[*index] = parse_coefficient(value, path + "." + name);
  }
  return {family, std::move(coeffs)};
}

StateVector parse_product(const FamilyPtr& family, const json& list, const std::string& path) {
  if (family->kind() != "lr_strings") {
    schema_fail(path, "product states need an lr_strings family");
  }
  if (!list.is_array()) {
    schema_fail(path, "expected an array of [cL, cR] pairs");
  }
  std::vector<std::pair<ComplexRational, ComplexRational>> factors;
  for (std::size_t k = 0; k < list.size(); ++k) {
    const std::string fpath = path + "[" + std::to_string(k) + "]";
    if (!list[k].is_array() || list[k].size() != 2) {
      schema_fail(fpath, "expected [cL, cR]");
    }
    factors.emplace_back(parse_coefficient(list[k][0], fpath + "[0]"),
                         parse_coefficient(list[k][1], fpath + "[1]"));
  }
  if (factors.size() != static_cast<std::size_t>(family->n_particles())) {
    schema_fail(path, "expected " + std::to_string(family->n_particles()) + " particle factors");
  }
  return product_state(family, factors);
}

/// {"coeffs": {...}} or {"product": [...]}.
StateVector parse_state(const FamilyPtr& family, const json& doc, const std::string& path) {
  if (doc.is_object() && doc.contains("coeffs")) {
    return parse_coeff_map(family, doc.at("coeffs"), path + ".coeffs");
  }
  if (doc.is_object() && doc.contains("product")) {
    return parse_product(family, doc.at("product"), path + ".product");
  }
  schema_fail(path, "expected {\"coeffs\": ...} or {\"product\": ...}");
}

std::vector<Predicate> parse_tests(const Family& family, const json& doc) {
  if (!doc.is_array()) {
    schema_fail("tests", "expected an array");
  }
  std::vector<Predicate> tests;
  for (std::size_t k = 0; k < doc.size(); ++k) {
    const std::string path = "tests[" + std::to_string(k) + "]";
    const json& t = doc[k];
    if (t.is_object() && t.contains("pair")) {
      const json& p = t.at("pair");
      if (!p.is_array() || p.size() != 2 || !p[0].is_number_integer() ||
          !p[1].is_number_integer()) {
        schema_fail(path + ".pair", "expected a two-element integer array");
      }
      try {
        tests.push_back(family.pair_test(p[0].get<int>(), p[1].get<int>()));
      } catch (const ApplicabilityError& e) {
        schema_fail(path + ".pair", e.what());
      }
    } else if (t.is_object() && t.contains("predicate")) {
      if (!t.at("predicate").is_string()) {
        schema_fail(path + ".predicate", "expected a string");
      }
      const Predicate* found = family.find_test(t.at("predicate").get<std::string>());
      if (!found) {
        schema_fail(path + ".predicate", "not in the family's test universe");
      }
      tests.push_back(*found);
    } else {
      schema_fail(path, "expected {\"pair\": [i, j]} or {\"predicate\": name}");
    }
  }
  return tests;
}

json knowledge_tests_json(const Knowledge& k) {
  json tests = json::array();
  for (const TestOutcome& o : k.outcomes) {
    tests.push_back({{"test", o.predicate.display()},
                     {"x", format_scalar(o.x)},
                     {"verdict", std::string(to_string(o.verdict))}});
  }
  return tests;
}

json predicate_names(std::span<const Predicate> ps) {
  json out = json::array();
  for (const Predicate& p : ps) {
    out.push_back(p.display());
  }
  return out;
}

json verdict_json(const Verdict& v) {
  json out = {{"kind", v.paradoxical() ? "paradoxical" : "consistent"},
              {"checked", v.checked_count}};
  if (v.witness) {
    out["witness"] = *v.witness;
  }
  return out;
}

void render_knowledge(std::ostringstream& os, const Knowledge& k, const std::string& indent) {
  std::size_t width = 4;
  for (const TestOutcome& o : k.outcomes) {
    width = std::max(width, o.predicate.display().size());
  }
  for (const TestOutcome& o : k.outcomes) {
    os << indent << std::left << std::setw(static_cast<int>(width)) << o.predicate.display()
       << "  x = " << std::setw(8) << format_scalar(o.x) << "  " << to_string(o.verdict) << "\n";
  }
  os << indent << "A = " << format_predicate_set(k.affirmed) << "\n";
  os << indent << "D = " << format_predicate_set(k.denied) << "\n";
  os << indent << "U = " << format_predicate_set(k.uncertain) << "\n";
}

std::string verdict_line(const Verdict& v, std::size_t family_size) {
  std::ostringstream os;
  if (v.paradoxical()) {
    os << "PARADOXICAL (0 of " << family_size << " relations consistent)";
  } else {
    os << "CONSISTENT (witness " << *v.witness << ", found after checking " << v.checked_count
       << " of " << family_size << " relations)";
  }
  return os.str();
}

}  // namespace

std::string format_predicate_set(std::span<const Predicate> predicates) {
  std::string out = "{";
  for (std::size_t k = 0; k < predicates.size(); ++k) {
    out += (k ? ", " : "") + predicates[k].display();
  }
  return out + "}";
}

Scenario parse_scenario(const json& doc) {
  if (!doc.is_object()) {
    schema_fail("<root>", "expected a JSON object");
  }
  if (!doc.contains("version") || doc.at("version") != kSchemaVersion) {
    schema_fail("version", "expected \"" + std::string(kSchemaVersion) + "\"");
  }
  if (!doc.contains("family")) {
    schema_fail("family", "missing");
  }
  FamilyPtr family = share(family_from_description(doc.at("family")));

  std::optional<StateVector> psi;
  if (!doc.contains("psi") || doc.at("psi") == "uniform") {
    psi = uniform_psi(family);
  } else {
    psi = parse_state(family, doc.at("psi"), "psi");
  }

  if (!doc.contains("phi")) {
    schema_fail("phi", "missing");
  }
  const json& phi_doc = doc.at("phi");
  std::optional<StateVector> phi;
  std::vector<LabeledState> basis;
  if (phi_doc.is_object() && phi_doc.contains("basis")) {
    const json& list = phi_doc.at("basis");
    if (!list.is_array() || list.empty()) {
      schema_fail("phi.basis", "expected a non-empty array");
    }
    for (std::size_t k = 0; k < list.size(); ++k) {
      const std::string path = "phi.basis[" + std::to_string(k) + "]";
      std::string label = "Phi_" + std::to_string(k + 1);
      if (list[k].is_object() && list[k].contains("label")) {
        if (!list[k].at("label").is_string()) {
          schema_fail(path + ".label", "expected a string");
        }
        label = list[k].at("label").get<std::string>();
      }
      basis.push_back({std::move(label), parse_state(family, list[k], path)});
    }
  } else {
    phi = parse_state(family, phi_doc, "phi");
  }

  std::vector<Predicate> tests =
      doc.contains("tests")
          ? parse_tests(*family, doc.at("tests"))
          : std::vector<Predicate>(family->test_universe().begin(), family->test_universe().end());
  if (tests.empty()) {
    schema_fail("tests", "no tests to run");
  }
  return {family, std::move(*psi), std::move(phi), std::move(basis), std::move(tests), doc};
}

Scenario parse_scenario_text(std::string_view text, std::string_view source_name) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    // nlohmann reports "line L, column C" in its message.
    throw SchemaError(std::string(source_name) + ": " + e.what());
  }
  return parse_scenario(doc);
}

Scenario load_scenario_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) {
    throw SchemaError(path.string() + ": cannot open file");
  }
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_scenario_text(buffer.str(), path.string());
}

AnalysisReport analyze(const Scenario& scenario) {
  AnalysisReport report;
  report.family = scenario.family;
  report.tests = scenario.tests;
  report.source = scenario.source;
  if (scenario.is_basis()) {
    std::vector<StateVector> states;
    std::vector<std::string> labels;
    for (const LabeledState& b : scenario.basis) {
      states.push_back(b.state);
      labels.push_back(b.label);
    }
    report.basis =
        check_unconditional(*scenario.family, scenario.psi, states, scenario.tests, labels);
    return report;
  }
  report.s = inner(*scenario.phi, scenario.psi);
  report.knowledge = extract_knowledge(*scenario.phi, scenario.psi, scenario.tests);
  report.verdict = check_consistency(*scenario.family, *report.knowledge);
  return report;
}

ChromaticReport chroma(const Scenario& scenario) {
  if (scenario.is_basis()) {
    throw SchemaError("phi: chroma needs a single post-selected state, not a basis");
  }
  for (const Predicate& p : scenario.tests) {
    if (!p.is_pair()) {
      throw SchemaError("tests: chroma needs pair tests, got " + p.display());
    }
  }
  const Knowledge k = extract_knowledge(*scenario.phi, scenario.psi, scenario.tests);
  return analyze_coloring(k, scenario.family->n_particles());
}

std::string render_text(const AnalysisReport& report) {
  std::ostringstream os;
  const Family& f = *report.family;
  os << "family: " << f.kind() << ", " << f.n_particles() << " particles, " << f.size()
     << " configurations\n";
  if (report.basis) {
    const BasisReport& b = *report.basis;
    os << "basis: " << b.per_outcome.size() << " outcomes, "
       << (b.orthogonal ? "orthogonal" : "NOT orthogonal") << "\n";
    for (const BasisOutcome& o : b.per_outcome) {
      os << o.label << ": s = " << format_scalar(o.s) << "\n";
      if (!o.knowledge) {
        os << "  outcome impossible (s = 0)\n";
        continue;
      }
      render_knowledge(os, *o.knowledge, "  ");
      os << "  " << verdict_line(*o.verdict, f.size()) << "\n";
    }
    os << (b.all_paradoxical ? "UNCONDITIONALLY PARADOXICAL" : "NOT UNCONDITIONALLY PARADOXICAL")
       << "\n";
    return os.str();
  }
  os << "s = " << format_scalar(*report.s) << "\n";
  render_knowledge(os, *report.knowledge, "");
  os << verdict_line(*report.verdict, f.size()) << "\n";
  return os.str();
}

json report_to_json(const AnalysisReport& report) {
  const Family& f = *report.family;
  json out = {{"version", std::string(kSchemaVersion)},
              {"family", {{"kind", f.kind()}, {"particles", f.n_particles()}, {"size", f.size()}}}};
  if (report.basis) {
    const BasisReport& b = *report.basis;
    out["orthogonal"] = b.orthogonal;
    out["all_paradoxical"] = b.all_paradoxical;
    json outcomes = json::array();
    for (const BasisOutcome& o : b.per_outcome) {
      json entry = {{"label", o.label}, {"s", format_scalar(o.s)}};
      if (o.knowledge) {
        entry["tests"] = knowledge_tests_json(*o.knowledge);
        entry["affirmed"] = predicate_names(o.knowledge->affirmed);
        entry["denied"] = predicate_names(o.knowledge->denied);
        entry["uncertain"] = predicate_names(o.knowledge->uncertain);
        entry["verdict"] = verdict_json(*o.verdict);
      } else {
        entry["verdict"] = nullptr;
      }
      outcomes.push_back(std::move(entry));
    }
    out["outcomes"] = std::move(outcomes);
  } else {
    out["s"] = format_scalar(*report.s);
    out["tests"] = knowledge_tests_json(*report.knowledge);
    out["affirmed"] = predicate_names(report.knowledge->affirmed);
    out["denied"] = predicate_names(report.knowledge->denied);
    out["uncertain"] = predicate_names(report.knowledge->uncertain);
    out["verdict"] = verdict_json(*report.verdict);
  }
  out["scenario"] = report.source;
  return out;
}

std::string render_chroma_text(const ChromaticReport& report) {
  std::ostringstream os;
  os << "affirmed edges:";
  if (report.edges.empty()) {
    os << " none";
  }
  for (const ParticlePair& e : report.edges) {
    os << " " << e.first << "-" << e.second;
  }
  os << "\nmaximum clique:";
  for (int v : report.clique) {
    os << " " << v;
  }
  os << "\nclique_size = " << report.clique_size << "\n";
  os << "chromatic_number = " << report.chromatic_number << "\n";
  if (report.violates_four_color_bound()) {
    os << "violates four-color bound\n";
  }
  return os.str();
}

json chroma_to_json(const ChromaticReport& report) {
  json edges = json::array();
  for (const ParticlePair& e : report.edges) {
    edges.push_back({e.first, e.second});
  }
  return {{"edges", edges},
          {"clique", report.clique},
          {"clique_size", report.clique_size},
          {"chromatic_number", report.chromatic_number},
          {"violates_four_color_bound", report.violates_four_color_bound()}};
}

std::string format_coeffs(std::span<const ComplexRational> coeffs) {
  std::string out = "(";
  for (std::size_t k = 0; k < coeffs.size(); ++k) {
    out += (k ? ", " : "") + format_scalar(coeffs[k]);
  }
  return out + ")";
}

json hit_to_json(const ParadoxHit& hit) {
  json phi = json::array();
  for (const ComplexRational& c : hit.phi) {
    phi.push_back(format_scalar(c));
  }
  json psi = json::array();
  for (const ComplexRational& c : hit.psi) {
    psi.push_back(format_scalar(c));
  }
  return {{"phi", phi},
          {"psi", psi},
          {"s", format_scalar(hit.s)},
          {"tests", knowledge_tests_json(hit.knowledge)},
          {"affirmed", predicate_names(hit.knowledge.affirmed)},
          {"denied", predicate_names(hit.knowledge.denied)},
          {"uncertain", predicate_names(hit.knowledge.uncertain)},
          {"verdict", verdict_json(hit.verdict)}};
}

json min_family_to_json(const MinFamilyReport& report) {
  return {{"experiment", "min-family"},
          {"particles", report.n_particles},
          {"c", report.grid.max_coeff},
          {"imaginary", report.grid.include_imaginary},
          {"relations", report.relations},
          {"families_total", report.families_total},
          {"families_checked", report.families_checked},
          {"sampled", report.sampled},
          {"stride", report.stride},
          {"overlapping_phis", report.overlapping_phis},
          {"paradoxes", report.paradoxes},
          {"paradox_families", report.paradox_families}};
}

std::string validate_report(const json& report) {
  if (!report.is_object() || !report.contains("scenario")) {
    return "report has no embedded scenario";
  }
  const json fresh = report_to_json(analyze(parse_scenario(report.at("scenario"))));
  if (fresh == report) {
    return {};
  }
  for (const auto& [key, value] : fresh.items()) {
    if (!report.contains(key)) {
      return "missing field \"" + key + "\"";
    }
    if (report.at(key) != value) {
      return "field \"" + key + "\" differs: expected " + value.dump() + ", got " +
             report.at(key).dump();
    }
  }
  return "report has unexpected extra fields";
}

}  // namespace qpk
