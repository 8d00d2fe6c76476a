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

#include <gtest/gtest.h>

#include <json.hpp>

#include "oracle.hpp"
#include "qpk/errors.hpp"
#include "qpk/family.hpp"
#include "qpk/family_json.hpp"

namespace {

using nlohmann::json;

const qpk::Configuration& config(const qpk::Family& f, std::string_view name) {
  const auto index = f.index_of(name);
  if (!index) throw std::runtime_error("missing configuration " + std::string(name));
  return f[*index];
}

bool related(const qpk::Family& f, std::string_view name, int i, int j) {
  return qpk::Predicate::pair(i, j).eval(config(f, name));
}

TEST(Family, PredicateEvaluation) {
  const qpk::Family tog = qpk::make_togetherness3();
  EXPECT_TRUE(related(tog, "t", 1, 2));
  EXPECT_FALSE(related(tog, "a1", 1, 2));
  const qpk::Family ternary = qpk::make_ternary_energy();
  EXPECT_TRUE(ternary.find_test("E_c=2")->eval(config(ternary, "112")));
}

TEST(Family, PredicateKindMismatchThrows) {
  const qpk::Family tog = qpk::make_togetherness3();
  const qpk::Family ternary = qpk::make_ternary_energy();
  EXPECT_THROW(ternary.find_test("E_a=1")->eval(tog[0]), qpk::ApplicabilityError);
  EXPECT_THROW(qpk::Predicate::pair(1, 2).eval(ternary[0]), qpk::ApplicabilityError);
  EXPECT_THROW(tog.check_applicable(*ternary.find_test("E_a=1")), qpk::ApplicabilityError);
  EXPECT_THROW(tog.pair_test(1, 4), qpk::ApplicabilityError);
  EXPECT_THROW(tog.pair_test(2, 2), qpk::ApplicabilityError);
}

TEST(Family, Togetherness) {
  const qpk::Family f = qpk::make_togetherness3();
  ASSERT_EQ(f.size(), 4u);
  EXPECT_EQ(f[0].name, "t");
  EXPECT_TRUE(related(f, "a3", 1, 2));
  EXPECT_FALSE(related(f, "a3", 2, 3));
  EXPECT_FALSE(related(f, "a3", 1, 3));
  for (int i = 1; i <= 3; ++i) {
    for (int j = 1; j <= 3; ++j) {
      if (i != j) {
        EXPECT_TRUE(related(f, "t", i, j));
      }
    }
  }
  ASSERT_EQ(f.test_universe().size(), 3u);
  EXPECT_EQ(f.test_universe()[0].display(), "P_12");
  EXPECT_EQ(f.test_universe()[1].display(), "P_23");
  EXPECT_EQ(f.test_universe()[2].display(), "P_13");
  EXPECT_EQ(f.pair_test(2, 1).display(), "P_12");
}

TEST(Family, TotalOrders) {
  const qpk::Family f = qpk::make_total_orders(3);
  ASSERT_EQ(f.size(), 6u);
  EXPECT_TRUE(related(f, "312", 1, 2));
  EXPECT_FALSE(related(f, "213", 1, 2));
  std::vector<std::string> names;
  for (const qpk::Configuration& c : f.configurations()) names.push_back(c.name);
  EXPECT_EQ(names, (std::vector<std::string>{"123", "231", "312", "132", "213", "321"}));
  EXPECT_EQ(f.test_universe().size(), 6u);
  EXPECT_THROW(qpk::make_total_orders(1), qpk::DomainError);
}

TEST(Family, Functions) {
  const qpk::Family f = qpk::make_one_to_one_functions(3);
  ASSERT_EQ(f.size(), 6u);
  const qpk::Predicate r12 = *f.find_test("r(1)=2");
  const qpk::Predicate r13 = *f.find_test("r(1)=3");
  EXPECT_TRUE(r12.eval(config(f, "231")));
  EXPECT_TRUE(r13.eval(config(f, "321")));
  for (const qpk::Configuration& c : f.configurations()) {
    EXPECT_FALSE(r12.eval(c) && r13.eval(c)) << c.name;
  }
  EXPECT_THROW(qpk::make_one_to_one_functions(1), qpk::DomainError);
}

TEST(Family, FunctionsAndOrdersAreDistinct) {
  const qpk::Family orders = qpk::make_total_orders(3);
  const qpk::Family functions = qpk::make_one_to_one_functions(3);
  EXPECT_FALSE(orders.same_structure(functions));
  EXPECT_FALSE(orders == functions);
}

TEST(Family, StarGraphs) {
  const qpk::Family f = qpk::make_star_graphs(4);
  ASSERT_EQ(f.size(), 4u);
  EXPECT_TRUE(related(f, "r_2", 2, 3));
  EXPECT_TRUE(related(f, "r_2", 2, 4));
  EXPECT_TRUE(related(f, "r_2", 1, 2));
  EXPECT_FALSE(related(f, "r_2", 3, 4));
  EXPECT_THROW(qpk::make_star_graphs(2), qpk::DomainError);
}

TEST(Family, LrStrings) {
  const qpk::Family f = qpk::make_lr_strings(3);
  ASSERT_EQ(f.size(), 8u);
  EXPECT_EQ(f[0].name, "LLL");
  EXPECT_EQ(f[1].name, "LLR");
  EXPECT_EQ(f[7].name, "RRR");
  EXPECT_TRUE(related(f, "LLR", 1, 2));
  EXPECT_FALSE(related(f, "LLR", 1, 3));
  for (const qpk::Predicate& p : f.test_universe()) {
    EXPECT_TRUE(p.eval(config(f, "RRR")));
  }
  EXPECT_THROW(qpk::make_lr_strings(0), qpk::DomainError);
  EXPECT_THROW(qpk::make_lr_strings(21), qpk::DomainError);
}

TEST(Family, TernaryEnergy) {
  const qpk::Family f = qpk::make_ternary_energy();
  ASSERT_EQ(f.size(), 6u);
  for (const qpk::Configuration& c : f.configurations()) {
    EXPECT_EQ(c.labels()[0] + c.labels()[1], c.labels()[2]) << c.name;
  }
  for (const qpk::Predicate& p : f.test_universe()) {
    EXPECT_FALSE(p.eval(config(f, "000"))) << p.display();
  }
}

TEST(Family, AllRelations) {
  EXPECT_EQ(qpk::make_all_relations(1).size(), 2u);
  const qpk::Family f = qpk::make_all_relations(2);
  ASSERT_EQ(f.size(), 16u);
  EXPECT_EQ(f[0].name, "{}");
  EXPECT_EQ(f.test_universe().size(), 4u);
  EXPECT_THROW(qpk::make_all_relations(3), qpk::SizeError);
}

// Independent re-derivations of every generator's membership rule.
TEST(FamilyOracle, TotalOrdersMatchRankDefinition) {
  for (int n = 2; n <= 5; ++n) {
    const qpk::Family f = qpk::make_total_orders(n);
    const auto perms = oracle::permutations(n);
    ASSERT_EQ(f.size(), perms.size());
    for (const auto& perm : perms) {
      std::string name;
      std::vector<int> rank(n + 1);
      for (int k = 0; k < n; ++k) {
        name += static_cast<char>('0' + perm[k]);
        rank[perm[k]] = k;
      }
      for (int i = 1; i <= n; ++i) {
        for (int j = 1; j <= n; ++j) {
          ASSERT_EQ(related(f, name, i, j), rank[i] < rank[j]) << name << " " << i << j;
        }
      }
    }
  }
}

TEST(FamilyOracle, FunctionsMatchPositionDigitReading) {
  for (int n = 2; n <= 5; ++n) {
    const qpk::Family f = qpk::make_one_to_one_functions(n);
    for (const auto& perm : oracle::permutations(n)) {
      std::string name;
      for (int d : perm) name += static_cast<char>('0' + d);
      for (int i = 1; i <= n; ++i) {
        for (int j = 1; j <= n; ++j) {
          ASSERT_EQ(related(f, name, i, j), perm[i - 1] == j);
        }
      }
    }
  }
}

TEST(FamilyOracle, StarsMatchCenterDefinition) {
  for (int n = 3; n <= 7; ++n) {
    const qpk::Family f = qpk::make_star_graphs(n);
    for (int k = 1; k <= n; ++k) {
      const std::string name = "r_" + std::to_string(k);
      for (int i = 1; i <= n; ++i) {
        for (int j = 1; j <= n; ++j) {
          ASSERT_EQ(related(f, name, i, j), i != j && (i == k || j == k));
        }
      }
    }
  }
}

TEST(FamilyOracle, LrStringsMatchSameBoxDefinition) {
  for (int n = 1; n <= 5; ++n) {
    const qpk::Family f = qpk::make_lr_strings(n);
    ASSERT_EQ(f.size(), 1u << n);
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
      std::string name;
      for (int k = n - 1; k >= 0; --k) name += (mask >> k) & 1u ? 'R' : 'L';
      for (int i = 1; i <= n; ++i) {
        for (int j = 1; j <= n; ++j) {
          ASSERT_EQ(related(f, name, i, j), i != j && name[i - 1] == name[j - 1]);
        }
      }
    }
  }
}

TEST(FamilyOracle, AllRelationsAreEverySubset) {
  const qpk::Family f = qpk::make_all_relations(2);
  std::set<oracle::Rel> seen;
  for (const qpk::Configuration& c : f.configurations()) {
    oracle::Rel rel;
    for (int i = 1; i <= 2; ++i) {
      for (int j = 1; j <= 2; ++j) {
        if (c.pairs().contains(i, j)) rel.insert({i, j});
      }
    }
    seen.insert(rel);
  }
  EXPECT_EQ(seen.size(), 16u);
}

TEST(FamilyOracle, TernaryMatchesEnergyConstraint) {
  const qpk::Family f = qpk::make_ternary_energy();
  std::set<std::string> expected;
  for (int a = 0; a <= 2; ++a) {
    for (int b = 0; b <= 2; ++b) {
      const int c = a + b;
      if (c <= 2) {
        expected.insert(std::to_string(a) + std::to_string(b) + std::to_string(c));
      }
    }
  }
  std::set<std::string> names;
  for (const qpk::Configuration& c : f.configurations()) {
    names.insert(c.name);
    EXPECT_EQ(f.find_test("E_a=1")->eval(c), c.labels()[0] == 1);
    EXPECT_EQ(f.find_test("E_b=1")->eval(c), c.labels()[1] == 1);
    EXPECT_EQ(f.find_test("E_c=2")->eval(c), c.labels()[2] == 2);
  }
  EXPECT_EQ(names, expected);
}

TEST(FamilyProperty, TotalOrderPairCountsAreHalf) {
  for (int n = 2; n <= 6; ++n) {
    const qpk::Family f = qpk::make_total_orders(n);
    for (const qpk::Predicate& p : f.test_universe()) {
      std::size_t count = 0;
      for (const qpk::Configuration& c : f.configurations()) count += p.eval(c);
      ASSERT_EQ(count * 2, f.size()) << n << " " << p.display();
    }
  }
}

TEST(FamilyProperty, EachStarSatisfiesNMinusOnePairs) {
  for (int n = 3; n <= 9; ++n) {
    const qpk::Family f = qpk::make_star_graphs(n);
    ASSERT_EQ(f.test_universe().size(), static_cast<std::size_t>(n * (n - 1) / 2));
    for (const qpk::Configuration& c : f.configurations()) {
      std::size_t count = 0;
      for (const qpk::Predicate& p : f.test_universe()) count += p.eval(c);
      ASSERT_EQ(count, static_cast<std::size_t>(n - 1)) << c.name;
    }
    for (const qpk::Predicate& p : f.test_universe()) {
      std::size_t count = 0;
      for (const qpk::Configuration& c : f.configurations()) count += p.eval(c);
      ASSERT_EQ(count, 2u);
    }
  }
}

TEST(FamilyProperty, SymmetricFamiliesAreSymmetric) {
  for (const qpk::Family& f : {qpk::make_togetherness3(), qpk::make_star_graphs(5),
                               qpk::make_lr_strings(4)}) {
    EXPECT_TRUE(f.symmetric());
    for (const qpk::Configuration& c : f.configurations()) {
      for (const qpk::ParticlePair& p : c.pairs().pairs()) {
        ASSERT_TRUE(c.pairs().contains(p.second, p.first)) << f.kind() << " " << c.name;
      }
    }
  }
}

TEST(FamilyProperty, CyclicGroupingCoversAllPermutations) {
  for (int n = 2; n <= 6; ++n) {
    auto grouped = qpk::cyclic_grouped_permutations(n);
    std::sort(grouped.begin(), grouped.end());
    EXPECT_EQ(grouped, oracle::permutations(n));
  }
}

TEST(Family, ConstructorValidation) {
  const qpk::PairSet edge(3, {{1, 2}, {2, 1}});
  const qpk::PairSet directed(3, {{1, 2}});
  using Configs = std::vector<qpk::Configuration>;
  EXPECT_THROW(qpk::Family("custom", 3, Configs{}, {}, false), qpk::DomainError);
  EXPECT_THROW(qpk::Family("custom", 3, Configs{{"x", edge}, {"x", edge}}, {}, true),
               qpk::DomainError);
  EXPECT_THROW(qpk::Family("custom", 3, Configs{{"x", directed}}, {}, true), qpk::DomainError);
  EXPECT_THROW(qpk::Family("custom", 2, Configs{{"x", edge}}, {}, true), qpk::DomainError);
  EXPECT_THROW(qpk::Family("custom", 3, Configs{{"x", edge}, {"y", qpk::LabelTuple{1}}}, {}, false),
               qpk::DomainError);
  EXPECT_THROW(qpk::PairSet(2).insert(3, 1), qpk::DomainError);
}

TEST(FamilyJson, Generator) {
  const qpk::Family f = qpk::family_from_description(json{{"generator", "total_orders"}, {"n", 3}});
  EXPECT_EQ(f, qpk::make_total_orders(3));
}

TEST(FamilyJson, CustomTogethernessMatchesGenerator) {
  const json desc = json::parse(R"({"custom": {"particles": 3, "configurations": [
      {"name": "t", "pairs": [[1,2],[2,1],[2,3],[3,2],[1,3],[3,1]]},
      {"name": "a1", "pairs": [[2,3],[3,2]]},
      {"name": "a2", "pairs": [[1,3],[3,1]]},
      {"name": "a3", "pairs": [[1,2],[2,1]]}]}})");
  const qpk::Family f = qpk::family_from_description(desc);
  EXPECT_TRUE(f.same_structure(qpk::make_togetherness3()));
  EXPECT_TRUE(f.symmetric());
}

TEST(FamilyJson, CustomTuples) {
  const json desc = json::parse(R"({"custom": {"configurations": [
      {"name": "00", "labels": [0, 0]}, {"name": "11", "labels": [1, 1]}],
      "predicates": [{"name": "first=1", "index": 0, "equals": 1}]}})");
  const qpk::Family f = qpk::family_from_description(desc);
  EXPECT_EQ(f.size(), 2u);
  EXPECT_TRUE(f.find_test("first=1")->eval(f[1]));
}

void expect_schema_error(const std::string& text, const std::string& fragment) {
  try {
    qpk::family_from_description(json::parse(text));
    FAIL() << "accepted " << text;
  } catch (const qpk::SchemaError& e) {
    EXPECT_NE(std::string(e.what()).find(fragment), std::string::npos) << e.what();
  }
}

TEST(FamilyJson, Errors) {
  expect_schema_error(R"({"generator": "nope"})", "unknown generator");
  expect_schema_error(R"({"generator": "total_orders"})", "missing \"n\"");
  expect_schema_error(R"({"generator": "star_graphs", "n": 2})", "star_graphs");
  expect_schema_error(R"({"custom": {"particles": 3, "configurations": [
      {"name": "t", "pairs": [[1,2],[2,1]]}, {"name": "t", "pairs": []}]}})",
                      "duplicate configuration name");
  expect_schema_error(R"({"custom": {"particles": 2, "configurations": [
      {"name": "x", "pairs": [[1,3]]}]}})",
                      "family.custom.configurations[0].pairs[0]");
  expect_schema_error(R"({"custom": {"particles": 2, "configurations": []}})", "empty");
  expect_schema_error(R"([1, 2])", "expected an object");
}

}  // namespace
