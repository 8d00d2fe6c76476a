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

#include "qpk/inference.hpp"

namespace qpk {

struct ExpectedTest {
  std::string test;
  std::string x;
  TestVerdict verdict;
};

struct ExpectedOutcome {
  std::string label;
  std::string s;
  std::vector<ExpectedTest> tests;
  bool paradoxical;
};

/// A scenario shipped with the tool together with the values it must reproduce.
struct BuiltinExample {
  std::string name;
  std::string summary;
  std::string_view scenario_json;
  /// One entry for a single post-selection, one per basis vector otherwise.
  std::vector<ExpectedOutcome> outcomes;
  std::optional<bool> orthogonal;
  std::optional<int> chromatic_number;
};

const std::vector<BuiltinExample>& builtin_examples();
const BuiltinExample* find_builtin(std::string_view name);

struct VerifyResult {
  std::string name;
  bool passed = true;
  /// One line per mismatch; empty when everything agreed.
  std::vector<std::string> mismatches;
  std::string summary;
};

/// Runs the embedded scenario and compares s, every x and verdict, A, D and the paradox
/// verdict with the expected values. When `scenario_dir` is given, the file
/// `<scenario_dir>/<name>.json` must also produce the same report as the embedded copy.
VerifyResult verify_builtin(const BuiltinExample& example,
                            const std::optional<std::filesystem::path>& scenario_dir = {});

}  // namespace qpk
