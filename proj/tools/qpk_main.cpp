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

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "qpk/errors.hpp"
#include "qpk/family.hpp"
#include "qpk/registry.hpp"
#include "qpk/scenario.hpp"
#include "qpk/search.hpp"

namespace {

using nlohmann::json;

enum ExitCode : int {
  kOk = 0,
  kMismatch = 1,
  kSchema = 2,
  kNonOverlapping = 3,
  kBudget = 4,
};

std::string read_input(const std::string& path) {
  std::stringstream buffer;
  if (path == "-") {
    buffer << std::cin.rdbuf();
  } else {
    std::ifstream in(path);
    if (!in) {
      throw qpk::SchemaError(path + ": cannot open file");
    }
    buffer << in.rdbuf();
  }
  return buffer.str();
}

qpk::Scenario load(const std::string& path) {
  return qpk::parse_scenario_text(read_input(path), path == "-" ? "<stdin>" : path);
}

qpk::Family make_family(const std::string& name, int n) {
  if (name == "togetherness3") return qpk::make_togetherness3();
  if (name == "ternary_energy") return qpk::make_ternary_energy();
  if (name == "total_orders") return qpk::make_total_orders(n);
  if (name == "one_to_one_functions") return qpk::make_one_to_one_functions(n);
  if (name == "star_graphs") return qpk::make_star_graphs(n);
  if (name == "lr_strings") return qpk::make_lr_strings(n);
  if (name == "all_relations") return qpk::make_all_relations(n);
  throw qpk::SchemaError("--family: unknown generator \"" + name + "\"");
}

struct SearchArgs {
  std::string family;
  std::string experiment;
  int n = 3;
  int c = 1;
  bool imaginary = false;
  bool all_multiples = false;
  bool search_psi = false;
  std::uint64_t budget = qpk::kDefaultBudget;
  unsigned threads = 0;
  std::vector<std::string> pairs;
  bool json = false;
};

qpk::GridSpec grid_of(const SearchArgs& args) {
  return {args.c, args.imaginary, !args.all_multiples};
}

std::string grid_text(const qpk::GridSpec& g) {
  std::ostringstream os;
  os << "c=" << g.max_coeff << (g.include_imaginary ? " (gaussian" : " (real")
     << (g.skip_scalar_multiples ? ", one per scaling class)" : ", all multiples)");
  return os.str();
}

int run_search(const SearchArgs& args) {
  const qpk::GridSpec grid = grid_of(args);
  if (args.experiment == "min-family") {
    const qpk::MinFamilyReport r = qpk::min_family_experiment(args.n, grid, args.budget, args.threads);
    if (args.json) {
      std::cout << qpk::min_family_to_json(r).dump(2) << "\n";
    } else {
      std::cout << "min-family experiment: " << r.n_particles << " particles, " << r.relations
                << " relations, grid " << grid_text(grid) << "\n";
      std::cout << (r.sampled ? "sampled with stride " + std::to_string(r.stride)
                              : std::string("exhaustive"))
                << ", " << r.overlapping_phis << " post-selections with s != 0\n";
      for (const std::string& f : r.paradox_families) {
        std::cout << "paradox: " << f << "\n";
      }
      std::cout << r.paradoxes << " paradoxes / " << r.families_checked << " families\n";
    }
    return r.paradoxes == 0 ? kOk : kMismatch;
  }
  if (args.experiment == "three-minimal") {
    qpk::SearchOptions options{args.budget, args.threads, false};
    const auto hits = qpk::three_relation_minimal_search(grid, options);
    std::vector<std::string> families;
    for (const qpk::MinimalHit& h : hits) {
      std::string key = h.members[0] + " " + h.members[1] + " " + h.members[2];
      if (families.empty() || families.back() != key) {
        families.push_back(key);
      }
    }
    if (args.json) {
      json out = {{"experiment", "three-minimal"},
                  {"c", grid.max_coeff},
                  {"pool", qpk::three_particle_pool().size()},
                  {"hit_families", families.size()},
                  {"hits", json::array()}};
      for (const qpk::MinimalHit& h : hits) {
        json entry = qpk::hit_to_json(h.hit);
        entry["family"] = h.members;
        out["hits"].push_back(std::move(entry));
      }
      std::cout << out.dump(2) << "\n";
    } else {
      for (const qpk::MinimalHit& h : hits) {
        std::cout << "{" << h.members[0] << ", " << h.members[1] << ", " << h.members[2]
                  << "}  phi = " << qpk::format_coeffs(h.hit.phi)
                  << "  A = " << qpk::format_predicate_set(h.hit.knowledge.affirmed)
                  << "  D = " << qpk::format_predicate_set(h.hit.knowledge.denied) << "\n";
      }
      std::cout << families.size() << " paradoxical three-relation families, " << hits.size()
                << " hits, grid " << grid_text(grid) << "\n";
    }
    return kOk;
  }
  if (!args.experiment.empty()) {
    throw qpk::SchemaError("--experiment: expected min-family or three-minimal");
  }
  if (args.family.empty()) {
    throw qpk::SchemaError("--family is required unless --experiment is given");
  }
  qpk::FamilyPtr family = qpk::share(make_family(args.family, args.n));
  std::vector<qpk::Predicate> tests;
  for (const std::string& p : args.pairs) {
    int i = 0;
    int j = 0;
    char comma = 0;
    std::istringstream is(p);
    if (!(is >> i >> comma >> j) || comma != ',') {
      throw qpk::SchemaError("--pair: expected i,j, got \"" + p + "\"");
    }
    tests.push_back(family->pair_test(i, j));
  }
  if (tests.empty()) {
    tests.assign(family->test_universe().begin(), family->test_universe().end());
  }
  qpk::SearchOptions options{args.budget, args.threads, args.search_psi};
  const qpk::SearchResult result = qpk::search_paradoxes(family, tests, grid, std::nullopt, options);
  if (args.json) {
    json out = {{"family", family->kind()},
                {"particles", family->n_particles()},
                {"c", grid.max_coeff},
                {"candidates", result.candidates},
                {"overlapping", result.overlapping},
                {"hits", json::array()}};
    for (const qpk::ParadoxHit& h : result.hits) {
      out["hits"].push_back(qpk::hit_to_json(h));
    }
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << "family: " << family->kind() << ", " << family->size()
              << " configurations; grid " << grid_text(grid) << "\n";
    for (const qpk::ParadoxHit& h : result.hits) {
      std::cout << "phi = " << qpk::format_coeffs(h.phi);
      if (args.search_psi) {
        std::cout << "  psi = " << qpk::format_coeffs(h.psi);
      }
      std::cout << "  s = " << qpk::format_scalar(h.s)
                << "  A = " << qpk::format_predicate_set(h.knowledge.affirmed)
                << "  D = " << qpk::format_predicate_set(h.knowledge.denied) << "\n";
    }
    std::cout << result.hits.size() << " paradoxes among " << result.overlapping
              << " post-selections with s != 0 (" << result.candidates << " candidates)\n";
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact pre/post-selection analysis of quantum paradoxical knowledge"};
  app.require_subcommand(1);

  std::string verify_name;
  std::string scenario_dir;
  auto* verify = app.add_subcommand("verify", "Re-run built-in examples against expected values");
  verify->add_option("example", verify_name, "Example name or \"all\"")->required();
  verify->add_option("--scenario-dir", scenario_dir,
                     "Directory of shipped scenario files to cross-check against");

  std::string analyze_path;
  bool analyze_json = false;
  auto* analyze = app.add_subcommand("analyze", "Analyze a scenario file (\"-\" for stdin)");
  analyze->add_option("scenario", analyze_path)->required();
  analyze->add_flag("--json", analyze_json, "Machine-readable output");

  std::string validate_path;
  auto* validate = app.add_subcommand("validate", "Check an analyze --json report (\"-\" for stdin)");
  validate->add_option("report", validate_path)->required();

  std::string chroma_path;
  bool chroma_json = false;
  auto* chroma = app.add_subcommand("chroma", "Color the graph of affirmed pairs");
  chroma->add_option("scenario", chroma_path)->required();
  chroma->add_flag("--json", chroma_json, "Machine-readable output");

  SearchArgs sargs;
  auto* search = app.add_subcommand("search", "Search coefficient grids for paradoxes");
  search->add_option("--family", sargs.family, "Family generator name");
  search->add_option("--n", sargs.n, "Particle count")->capture_default_str();
  search->add_option("--c", sargs.c, "Grid bound: coefficients in [-c, c]")->capture_default_str();
  search->add_flag("--imaginary", sargs.imaginary, "Use Gaussian-integer coefficients");
  search->add_flag("--all-multiples", sargs.all_multiples,
                   "Keep every scalar multiple instead of one per class");
  search->add_flag("--search-psi", sargs.search_psi, "Also enumerate Psi over the grid");
  search->add_option("--budget", sargs.budget, "Maximum classification calls")
      ->capture_default_str();
  search->add_option("--threads", sargs.threads, "Worker threads (0 = all cores)");
  search->add_option("--pair", sargs.pairs, "Pair test i,j (repeatable; default: all)");
  search->add_option("--experiment", sargs.experiment, "min-family or three-minimal");
  search->add_flag("--json", sargs.json, "Machine-readable output");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*verify) {
      std::vector<const qpk::BuiltinExample*> selected;
      if (verify_name == "all") {
        for (const qpk::BuiltinExample& e : qpk::builtin_examples()) {
          selected.push_back(&e);
        }
      } else if (const qpk::BuiltinExample* e = qpk::find_builtin(verify_name)) {
        selected.push_back(e);
      } else {
        std::cerr << "unknown example \"" << verify_name << "\"; known:";
        for (const qpk::BuiltinExample& e : qpk::builtin_examples()) {
          std::cerr << " " << e.name;
        }
        std::cerr << "\n";
        return kSchema;
      }
      std::optional<std::filesystem::path> dir;
      if (!scenario_dir.empty()) {
        dir = scenario_dir;
      }
      std::size_t passed = 0;
      for (const qpk::BuiltinExample* e : selected) {
        const qpk::VerifyResult r = qpk::verify_builtin(*e, dir);
        std::cout << (r.passed ? "PASS " : "FAIL ") << r.name << ": " << r.summary << "\n";
        for (const std::string& m : r.mismatches) {
          std::cout << "    " << m << "\n";
        }
        passed += r.passed ? 1 : 0;
      }
      std::cout << passed << " of " << selected.size() << " scenarios pass\n";
      return passed == selected.size() ? kOk : kMismatch;
    }
    if (*analyze) {
      const qpk::AnalysisReport report = qpk::analyze(load(analyze_path));
      if (analyze_json) {
        std::cout << qpk::report_to_json(report).dump(2) << "\n";
      } else {
        std::cout << qpk::render_text(report);
      }
      return kOk;
    }
    if (*validate) {
      json report;
      try {
        report = json::parse(read_input(validate_path));
      } catch (const json::parse_error& e) {
        throw qpk::SchemaError(e.what());
      }
      const std::string problem = qpk::validate_report(report);
      if (!problem.empty()) {
        std::cout << "MISMATCH: " << problem << "\n";
        return kMismatch;
      }
      std::cout << "report reproduces\n";
      return kOk;
    }
    if (*chroma) {
      const qpk::ChromaticReport report = qpk::chroma(load(chroma_path));
      if (chroma_json) {
        std::cout << qpk::chroma_to_json(report).dump(2) << "\n";
      } else {
        std::cout << qpk::render_chroma_text(report);
      }
      return kOk;
    }
    if (*search) {
      return run_search(sargs);
    }
  } catch (const qpk::NonOverlappingError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kNonOverlapping;
  } catch (const qpk::SizeError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kBudget;
  } catch (const qpk::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kSchema;
  }
  return kOk;
}
