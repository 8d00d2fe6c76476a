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

#include <json.hpp>

#include "qpk/family.hpp"

namespace qpk {

/// Builds a family from the "family" section of a scenario document. Accepts either a
/// generator reference
///   {"generator": "total_orders", "n": 3}
/// or a custom list
///   {"custom": {"particles": 3, "configurations": [{"name": "t", "pairs": [[1, 2], ...]}]}}
///   {"custom": {"configurations": [{"name": "112", "labels": [1, 1, 2]}, ...],
///               "predicates": [{"name": "E_c=2", "index": 2, "equals": 2}]}}
/// Throws SchemaError naming the offending field; DomainError from generators propagates
/// as SchemaError too.
Family family_from_description(const nlohmann::json& desc);

}  // namespace qpk
