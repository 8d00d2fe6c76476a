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

#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "qpk/family.hpp"
#include "qpk/inference.hpp"
#include "qpk/paradox.hpp"
#include "qpk/search.hpp"

namespace qpk {

inline constexpr std::string_view kSchemaVersion = "qpk/1";

struct LabeledState {
  std::string label;
  StateVector state;
};

/// A preparation, a set of candidate intermediate tests, and either one post-selected state
/// or a complete final basis.
struct Scenario {
  FamilyPtr family;
  StateVector psi;
  std::optional<StateVector> phi;
  std::vector<LabeledState> basis;
  std::vector<Predicate> tests;
  /// The document the scenario was parsed from.
  nlohmann::json source;

  bool is_basis() const { return !basis.empty(); }
};

/// Throws SchemaError with the offending field path.
Scenario parse_scenario(const nlohmann::json& doc);
/// JSON syntax errors become SchemaError carrying line and column.
Scenario parse_scenario_text(std::string_view text, std::string_view source_name = "<scenario>");
Scenario load_scenario_file(const std::filesystem::path& path);

struct AnalysisReport {
  FamilyPtr family;
  std::vector<Predicate> tests;
  /// Single post-selection.
  std::optional<ComplexRational> s;
  std::optional<Knowledge> knowledge;
  std::optional<Verdict> verdict;
  /// Complete basis.
  std::optional<BasisReport> basis;
  nlohmann::json source;
};

/// Throws NonOverlappingError when a single post-selection has <Phi|Psi> = 0.
AnalysisReport analyze(const Scenario& scenario);

/// Knowledge of a single post-selection mapped onto the affirmed-pair graph. Throws
/// SchemaError for basis scenarios or non-pair tests.
ChromaticReport chroma(const Scenario& scenario);

std::string render_text(const AnalysisReport& report);
nlohmann::json report_to_json(const AnalysisReport& report);

std::string render_chroma_text(const ChromaticReport& report);
nlohmann::json chroma_to_json(const ChromaticReport& report);

/// Re-runs the scenario embedded in an analyze --json document and compares every value.
/// Returns an empty string on agreement, otherwise a description of the first difference.
std::string validate_report(const nlohmann::json& report);

nlohmann::json hit_to_json(const ParadoxHit& hit);
nlohmann::json min_family_to_json(const MinFamilyReport& report);

/// "(-1, 1, 1, 1)".
std::string format_coeffs(std::span<const ComplexRational> coeffs);

/// "{P_12, P_23}".
std::string format_predicate_set(std::span<const Predicate> predicates);

}  // namespace qpk
