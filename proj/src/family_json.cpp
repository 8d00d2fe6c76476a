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

#include "qpk/family_json.hpp"

#include <string>

#include "qpk/errors.hpp"

namespace qpk {

namespace {

using nlohmann::json;

[[noreturn]] void schema_fail(const std::string& path, const std::string& what) {
  throw SchemaError(path + ": " + what);
}

int require_int(const json& obj, const char* key, const std::string& path) {
  if (!obj.contains(key)) {
    schema_fail(path, std::string("missing \"") + key + "\"");
  }
  const json& v = obj.at(key);
  if (!v.is_number_integer()) {
    schema_fail(path + "." + key, "expected an integer");
  }
  return v.get<int>();
}

Family from_generator(const json& desc, const std::string& path) {
  if (!desc.at("generator").is_string()) {
    schema_fail(path + ".generator", "expected a string");
  }
  const std::string name = desc.at("generator").get<std::string>();
  try {
    if (name == "togetherness3") return make_togetherness3();
    if (name == "ternary_energy") return make_ternary_energy();
    if (name == "total_orders") return make_total_orders(require_int(desc, "n", path));
    if (name == "one_to_one_functions") {
      return make_one_to_one_functions(require_int(desc, "n", path));
    }
    if (name == "star_graphs") return make_star_graphs(require_int(desc, "n", path));
    if (name == "lr_strings") return make_lr_strings(require_int(desc, "n", path));
    if (name == "all_relations") return make_all_relations(require_int(desc, "n", path));
  } catch (const DomainError& e) {
    schema_fail(path, e.what());
  } catch (const SizeError& e) {
    schema_fail(path, e.what());
  }
  schema_fail(path + ".generator", "unknown generator \"" + name + "\"");
}

Family from_custom(const json& custom, const std::string& path) {
  if (!custom.is_object()) {
    schema_fail(path, "expected an object");
  }
  if (!custom.contains("configurations") || !custom.at("configurations").is_array()) {
    schema_fail(path, "missing \"configurations\" array");
  }
  const json& list = custom.at("configurations");
  if (list.empty()) {
    schema_fail(path + ".configurations", "empty configuration list");
  }
  const bool tuples = list.front().is_object() && list.front().contains("labels");
  const int n = tuples ? (custom.contains("particles") ? require_int(custom, "particles", path)
                                                       : 0)
                       : require_int(custom, "particles", path);
  if (!tuples && n < 1) {
    schema_fail(path + ".particles", "must be positive");
  }

  std::vector<Configuration> configs;
  for (std::size_t k = 0; k < list.size(); ++k) {
    const std::string cpath = path + ".configurations[" + std::to_string(k) + "]";
    const json& entry = list[k];
    if (!entry.is_object() || !entry.contains("name") || !entry.at("name").is_string()) {
      schema_fail(cpath, "expected an object with a string \"name\"");
    }
    Configuration c{entry.at("name").get<std::string>(), {}};
    if (tuples) {
      if (!entry.contains("labels") || !entry.at("labels").is_array()) {
        schema_fail(cpath, "missing \"labels\" array");
      }
      LabelTuple labels;
      for (const json& v : entry.at("labels")) {
        if (!v.is_number_integer()) {
          schema_fail(cpath + ".labels", "expected integers");
        }
        labels.push_back(v.get<int>());
      }
      c.payload = std::move(labels);
    } else {
      if (!entry.contains("pairs") || !entry.at("pairs").is_array()) {
        schema_fail(cpath, "missing \"pairs\" array");
      }
      PairSet pairs(n);
      const json& plist = entry.at("pairs");
      for (std::size_t m = 0; m < plist.size(); ++m) {
        const json& p = plist[m];
        const std::string ppath = cpath + ".pairs[" + std::to_string(m) + "]";
        if (!p.is_array() || p.size() != 2 || !p[0].is_number_integer() ||
            !p[1].is_number_integer()) {
          schema_fail(ppath, "expected a two-element integer array");
        }
        const int i = p[0].get<int>();
        const int j = p[1].get<int>();
        if (i < 1 || j < 1 || i > n || j > n) {
          schema_fail(ppath, "pair outside particles 1.." + std::to_string(n));
        }
        pairs.insert(i, j);
      }
      c.payload = std::move(pairs);
    }
    configs.push_back(std::move(c));
  }

  std::vector<Predicate> tests;
  bool symmetric = false;
  int particles = n;
  if (tuples) {
    particles = n > 0 ? n : static_cast<int>(configs.front().labels().size());
    if (custom.contains("predicates")) {
      const json& preds = custom.at("predicates");
      if (!preds.is_array()) {
        schema_fail(path + ".predicates", "expected an array");
      }
      for (std::size_t k = 0; k < preds.size(); ++k) {
        const std::string ppath = path + ".predicates[" + std::to_string(k) + "]";
        const json& p = preds[k];
        if (!p.is_object() || !p.contains("name") || !p.at("name").is_string()) {
          schema_fail(ppath, "expected an object with a string \"name\"");
        }
        const int index = require_int(p, "index", ppath);
        const int equals = require_int(p, "equals", ppath);
        if (index < 0) {
          schema_fail(ppath + ".index", "must be non-negative");
        }
        tests.push_back(Predicate::label_equals(p.at("name").get<std::string>(),
                                                static_cast<std::size_t>(index), equals));
      }
    }
  } else {
    symmetric = true;
    bool diagonal = false;
    for (const Configuration& c : configs) {
      symmetric = symmetric && c.pairs().is_symmetric();
      diagonal = diagonal || c.pairs().has_diagonal();
    }
    for (int i = 1; i <= n; ++i) {
      for (int j = symmetric ? i : 1; j <= n; ++j) {
        if (i == j && (symmetric || !diagonal)) {
          continue;
        }
        tests.push_back(Predicate::pair(i, j));
      }
    }
  }

  try {
    return Family("custom", particles, std::move(configs), std::move(tests), symmetric);
  } catch (const DomainError& e) {
    schema_fail(path, e.what());
  }
}

}  // namespace

Family family_from_description(const json& desc) {
  const std::string path = "family";
  if (!desc.is_object()) {
    schema_fail(path, "expected an object");
  }
  if (desc.contains("generator")) {
    return from_generator(desc, path);
  }
  if (desc.contains("custom")) {
    return from_custom(desc.at("custom"), path + ".custom");
  }
  schema_fail(path, "expected \"generator\" or \"custom\"");
}

}  // namespace qpk
