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

#include "qpk/registry.hpp"

#include <algorithm>
#include <sstream>

#include "embedded_scenarios.hpp"
#include "qpk/errors.hpp"
#include "qpk/scenario.hpp"

namespace qpk {

namespace {

constexpr TestVerdict kA = TestVerdict::kAffirmed;
constexpr TestVerdict kD = TestVerdict::kDenied;
constexpr TestVerdict kU = TestVerdict::kUncertain;

std::string_view embedded(std::string_view name) {
  for (const auto& [key, text] : embedded::kScenarios) {
    if (key == name) {
      return text;
    }
  }
  throw std::logic_error("scenario " + std::string(name) + " was not embedded at build time");
}

/// Star graphs on n particles post-selected on -r_k + (sum of the others): pairs touching k
/// are denied, pairs among the others affirmed.
std::vector<ExpectedTest> star4_outcome(int isolated) {
  std::vector<ExpectedTest> tests;
  for (int i = 1; i <= 4; ++i) {
    for (int j = i + 1; j <= 4; ++j) {
      const bool touches = i == isolated || j == isolated;
      tests.push_back({"P_" + std::to_string(i) + std::to_string(j), touches ? "0" : "2",
                       touches ? kD : kA});
    }
  }
  return tests;
}

std::vector<BuiltinExample> make_examples() {
  std::vector<BuiltinExample> out;
  out.push_back({"pigeonhole_qubits",
                 "three qubits in two boxes, |+>^3 post-selected on |+i>^3",
                 embedded("pigeonhole_qubits"),
                 {{"", "-2-2i", {{"P_12", "0", kD}, {"P_23", "0", kD}, {"P_13", "0", kD}}, true}},
                 std::nullopt,
                 std::nullopt});
  out.push_back({"pigeonhole_relations",
                 "togetherness relations t, a1, a2, a3 post-selected on -t + a1 + a2 + a3",
                 embedded("pigeonhole_relations"),
                 {{"", "2", {{"P_12", "0", kD}, {"P_23", "0", kD}, {"P_13", "0", kD}}, true}},
                 std::nullopt,
                 std::nullopt});
  out.push_back({"penrose",
                 "total orders of three energies, cyclic post-selection",
                 embedded("penrose"),
                 {{"",
                   "3",
                   {{"P_12", "3", kA},
                    {"P_23", "3", kA},
                    {"P_31", "3", kA},
                    {"P_21", "0", kD},
                    {"P_32", "0", kD},
                    {"P_13", "0", kD}},
                   true}},
                 std::nullopt,
                 std::nullopt});
  out.push_back({"functions",
                 "one-to-one functions on three points, r(1)=2 and r(1)=3 both affirmed",
                 embedded("functions"),
                 {{"", "2", {{"r(1)=2", "2", kA}, {"r(1)=3", "2", kA}}, true}},
                 std::nullopt,
                 std::nullopt});
  {
    std::vector<ExpectedOutcome> outcomes;
    for (int k = 1; k <= 4; ++k) {
      outcomes.push_back({"Phi_" + std::to_string(k), "2", star4_outcome(k), true});
    }
    out.push_back({"star4_unconditional",
                   "star graphs on four particles measured in a full orthogonal basis",
                   embedded("star4_unconditional"),
                   std::move(outcomes),
                   true,
                   std::nullopt});
  }
  {
    std::vector<ExpectedTest> tests;
    for (int i = 1; i <= 6; ++i) {
      for (int j = i + 1; j <= 6; ++j) {
        const bool clique = j <= 5;
        tests.push_back({"P_" + std::to_string(i) + std::to_string(j), clique ? "2" : "-2",
                         clique ? kA : kU});
      }
    }
    out.push_back({"star6_clique",
                   "star graphs on six particles, affirmed 5-clique beyond four colors",
                   embedded("star6_clique"),
                   {{"", "2", std::move(tests), true}},
                   std::nullopt,
                   5});
  }
  out.push_back({"ternary_energy",
                 "E_a + E_b = E_c with E_a=1 and E_b=1 affirmed but E_c=2 denied",
                 embedded("ternary_energy"),
                 {{"", "4", {{"E_a=1", "4", kA}, {"E_b=1", "4", kA}, {"E_c=2", "0", kD}}, true}},
                 std::nullopt,
                 std::nullopt});
  out.push_back({"star3_isolated",
                 "star graphs on three particles, particle 1 isolated",
                 embedded("star3_isolated"),
                 {{"", "1", {{"P_12", "0", kD}, {"P_13", "0", kD}, {"P_23", "2", kU}}, true}},
                 std::nullopt,
                 std::nullopt});
  out.push_back({"pigeonhole_nontransitive",
                 "qubit pigeonhole outcome |+i,+i,-i>: togetherness is not transitive",
                 embedded("pigeonhole_nontransitive"),
                 {{"",
                   "2-2i",
                   {{"P_12", "0", kD}, {"P_23", "2-2i", kA}, {"P_13", "2-2i", kA}},
                   true}},
                 std::nullopt,
                 std::nullopt});
  return out;
}

void compare_outcome(const ExpectedOutcome& want, const std::string& where,
                     const ComplexRational& s, const Knowledge& k, const Verdict& v,
                     std::vector<std::string>& mismatches) {
  auto mismatch = [&](const std::string& what, const std::string& expected,
                      const std::string& got) {
    mismatches.push_back(where + what + ": expected " + expected + ", got " + got);
  };
  if (format_scalar(s) != want.s) {
    mismatch("s", want.s, format_scalar(s));
  }
  if (k.outcomes.size() != want.tests.size()) {
    mismatch("test count", std::to_string(want.tests.size()), std::to_string(k.outcomes.size()));
    return;
  }
  std::vector<std::string> want_a, want_d, got_a, got_d;
  for (std::size_t t = 0; t < want.tests.size(); ++t) {
    const ExpectedTest& e = want.tests[t];
    const TestOutcome& o = k.outcomes[t];
    if (o.predicate.display() != e.test) {
      mismatch("test " + std::to_string(t), e.test, o.predicate.display());
      continue;
    }
    if (format_scalar(o.x) != e.x) {
      mismatch(e.test + " x", e.x, format_scalar(o.x));
    }
    if (o.verdict != e.verdict) {
      mismatch(e.test + " verdict", std::string(to_string(e.verdict)),
               std::string(to_string(o.verdict)));
    }
    if (e.verdict == kA) want_a.push_back(e.test);
    if (e.verdict == kD) want_d.push_back(e.test);
  }
  for (const Predicate& p : k.affirmed) got_a.push_back(p.display());
  for (const Predicate& p : k.denied) got_d.push_back(p.display());
  auto join = [](const std::vector<std::string>& v) {
    std::string s = "{";
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + v[i];
    return s + "}";
  };
  if (want_a != got_a) mismatch("A", join(want_a), join(got_a));
  if (want_d != got_d) mismatch("D", join(want_d), join(got_d));
  if (v.paradoxical() != want.paradoxical) {
    mismatch("verdict", want.paradoxical ? "paradoxical" : "consistent",
             v.paradoxical() ? "paradoxical" : "consistent");
  }
}

}  // namespace

const std::vector<BuiltinExample>& builtin_examples() {
  static const std::vector<BuiltinExample> examples = make_examples();
  return examples;
}

const BuiltinExample* find_builtin(std::string_view name) {
  const auto& all = builtin_examples();
  auto it = std::find_if(all.begin(), all.end(), [&](const auto& e) { return e.name == name; });
  return it == all.end() ? nullptr : &*it;
}

VerifyResult verify_builtin(const BuiltinExample& example,
                            const std::optional<std::filesystem::path>& scenario_dir) {
  VerifyResult result;
  result.name = example.name;
  std::vector<std::string>& mismatches = result.mismatches;
  try {
    const Scenario scenario = parse_scenario_text(example.scenario_json, example.name);
    const AnalysisReport report = analyze(scenario);
    std::ostringstream summary;
    if (report.basis) {
      const BasisReport& b = *report.basis;
      if (example.orthogonal && b.orthogonal != *example.orthogonal) {
        mismatches.push_back("orthogonal: expected " + std::to_string(*example.orthogonal));
      }
      if (b.per_outcome.size() != example.outcomes.size()) {
        mismatches.push_back("outcome count: expected " +
                             std::to_string(example.outcomes.size()) + ", got " +
                             std::to_string(b.per_outcome.size()));
      } else {
        for (std::size_t k = 0; k < b.per_outcome.size(); ++k) {
          const BasisOutcome& o = b.per_outcome[k];
          if (!o.knowledge) {
            mismatches.push_back(o.label + ": outcome has s = 0");
            continue;
          }
          compare_outcome(example.outcomes[k], o.label + " ", o.s, *o.knowledge, *o.verdict,
                          mismatches);
        }
      }
      summary << b.per_outcome.size() << " outcomes, "
              << (b.orthogonal ? "orthogonal" : "not orthogonal") << ", "
              << (b.all_paradoxical ? "all paradoxical" : "not all paradoxical");
    } else {
      compare_outcome(example.outcomes.front(), "", *report.s, *report.knowledge, *report.verdict,
                      mismatches);
      summary << "s = " << format_scalar(*report.s)
              << ", A = " << format_predicate_set(report.knowledge->affirmed)
              << ", D = " << format_predicate_set(report.knowledge->denied) << ", "
              << (report.verdict->paradoxical() ? "paradoxical" : "consistent");
    }
    if (example.chromatic_number) {
      const ChromaticReport c = chroma(scenario);
      if (c.chromatic_number != *example.chromatic_number) {
        mismatches.push_back("chromatic_number: expected " +
                             std::to_string(*example.chromatic_number) + ", got " +
                             std::to_string(c.chromatic_number));
      }
      summary << ", chromatic number " << c.chromatic_number;
    }
    if (scenario_dir) {
      const std::filesystem::path file = *scenario_dir / (example.name + ".json");
      const AnalysisReport from_file = analyze(load_scenario_file(file));
      if (report_to_json(from_file) != report_to_json(report)) {
        mismatches.push_back(file.string() + " disagrees with the embedded copy");
      }
    }
    result.summary = summary.str();
  } catch (const Error& e) {
    mismatches.push_back(std::string("error: ") + e.what());
  }
  result.passed = mismatches.empty();
  return result;
}

}  // namespace qpk
