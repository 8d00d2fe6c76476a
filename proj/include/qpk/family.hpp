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

#include <compare>
#include <cstddef>
#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <variant>
#include <vector>

namespace qpk {

/// Ordered pair of 1-based particle labels.
struct ParticlePair {
  int first = 0;
  int second = 0;
  friend auto operator<=>(const ParticlePair&, const ParticlePair&) = default;
};

/// Dense membership table for a binary relation on particles 1..n.
class PairSet {
 public:
  PairSet() = default;
  explicit PairSet(int n_particles);
  PairSet(int n_particles, std::initializer_list<ParticlePair> pairs);

  int n_particles() const { return n_; }
  /// False for labels outside 1..n.
  bool contains(int i, int j) const;
  /// Throws DomainError for labels outside 1..n.
  void insert(int i, int j);
  void insert_symmetric(int i, int j) {
    insert(i, j);
    insert(j, i);
  }
  std::size_t count() const;
  bool is_symmetric() const;
  bool has_diagonal() const;
  /// Row-major order.
  std::vector<ParticlePair> pairs() const;

  friend bool operator==(const PairSet&, const PairSet&) = default;

 private:
  int n_ = 0;
  std::vector<bool> bits_;
};

/// Fixed-length list of small-integer labels, e.g. particle energies.
using LabelTuple = std::vector<int>;

struct Configuration {
  std::string name;
  std::variant<PairSet, LabelTuple> payload;

  bool is_relation() const { return std::holds_alternative<PairSet>(payload); }
  const PairSet& pairs() const { return std::get<PairSet>(payload); }
  const LabelTuple& labels() const { return std::get<LabelTuple>(payload); }

  friend bool operator==(const Configuration&, const Configuration&) = default;
};

/// A yes/no question asked of a configuration: either "is (i, j) in the relation"
/// or a named constraint on a label tuple.
class Predicate {
 public:
  using TupleTest = std::function<bool(std::span<const int>)>;

  /// Display defaults to "P_ij".
  static Predicate pair(int i, int j, std::string display = {});
  static Predicate tuple_constraint(std::string name, TupleTest test);
  /// Tuple constraint `labels[index] == value`.
  static Predicate label_equals(std::string name, std::size_t index, int value);

  bool is_pair() const { return pair_.has_value(); }
  /// Only valid when is_pair().
  ParticlePair particles() const { return *pair_; }
  const std::string& display() const { return display_; }

  /// Throws ApplicabilityError when the payload kinds do not match.
  bool eval(const Configuration& c) const;

  /// Pair predicates compare by particles, tuple constraints by name. Display text is
  /// cosmetic and ignored.
  friend bool operator==(const Predicate& a, const Predicate& b);

 private:
  Predicate() = default;

  std::optional<ParticlePair> pair_;
  std::string display_;
  TupleTest tuple_test_;
};

bool eval_predicate(const Configuration& c, const Predicate& p);

/// The relevant set R: an ordered list of configurations (the order fixes coefficient
/// indexing everywhere downstream) plus the predicates that may be measured on them.
class Family {
 public:
  /// Validates: at least one configuration, distinct names, relation payloads sized for
  /// `n_particles`, tuple payloads of uniform length. Throws DomainError otherwise.
  Family(std::string kind, int n_particles, std::vector<Configuration> configurations,
         std::vector<Predicate> test_universe, bool symmetric);

  /// Generator name ("total_orders", ...) or "custom".
  const std::string& kind() const { return kind_; }
  int n_particles() const { return n_particles_; }
  std::size_t size() const { return configurations_.size(); }
  std::span<const Configuration> configurations() const { return configurations_; }
  const Configuration& operator[](std::size_t index) const { return configurations_[index]; }
  std::span<const Predicate> test_universe() const { return test_universe_; }
  /// Every relation contains (j, i) whenever it contains (i, j).
  bool symmetric() const { return symmetric_; }
  bool is_relation_family() const { return configurations_.front().is_relation(); }

  std::optional<std::size_t> index_of(std::string_view name) const;

  /// Test-universe entry for (i, j), folding (j, i) onto (i, j) in symmetric families. Falls
  /// back to a fresh PairRelated(i, j) for pairs outside the universe. Throws
  /// ApplicabilityError for labels outside 1..n or tuple families.
  Predicate pair_test(int i, int j) const;
  /// Test-universe entry whose display text is `display`, if any.
  const Predicate* find_test(std::string_view display) const;

  /// Throws ApplicabilityError when `p` cannot be evaluated on this family.
  void check_applicable(const Predicate& p) const;

  /// Same particle count, configurations (names and payloads, in order) and the same
  /// test universe as a set. The generator kind is ignored.
  bool same_structure(const Family& other) const;

  friend bool operator==(const Family& a, const Family& b) {
    return a.kind_ == b.kind_ && a.same_structure(b);
  }

 private:
  std::string kind_;
  int n_particles_;
  std::vector<Configuration> configurations_;
  std::vector<Predicate> test_universe_;
  bool symmetric_;
  std::unordered_map<std::string, std::size_t> index_;
};

using FamilyPtr = std::shared_ptr<const Family>;

inline FamilyPtr share(Family f) { return std::make_shared<const Family>(std::move(f)); }

// Generators. Names follow the conventions used throughout: "t"/"a1".."a3", permutation
// strings, "r_k", L/R strings, energy triples.

/// t, a1, a2, a3: all three particles together, or particle k alone.
Family make_togetherness3();
/// n! total orderings by energy. Name "312" means E_3 < E_1 < E_2; (i, j) is in the
/// relation iff E_i < E_j. Configurations are grouped by cyclic relabeling of the
/// particles: 123, 231, 312, 132, 213, 321 for n = 3.
Family make_total_orders(int n);
/// n! one-to-one functions. Name "231" means r(1)=2, r(2)=3, r(3)=1. Same name order as
/// make_total_orders. Tests are displayed "r(i)=j".
Family make_one_to_one_functions(int n);
/// Star graphs r_1..r_n; r_k joins particle k to every other particle.
Family make_star_graphs(int n);
/// 2^n assignments of n particles to boxes L/R, in lexicographic order with L < R.
/// Particles i != j are related iff they share a box.
Family make_lr_strings(int n);
/// Energy triples (E_a, E_b, E_c) with E_a + E_b = E_c and labels in {0, 1, 2}.
Family make_ternary_energy();
/// Every relation on n <= 2 particles, ordered by bitmask over row-major pairs.
Family make_all_relations(int n);

/// Relation on n particles whose row-major pair k is present iff bit k of `mask` is set.
PairSet relation_from_mask(int n, unsigned long long mask);
/// "{}" or "{(1,1),(1,2)}".
std::string relation_name(const PairSet& pairs);

/// All permutations of 1..n: each permutation starting with 1 (in lexicographic order)
/// followed by its images under the relabeling k -> k+1 (mod n).
std::vector<std::vector<int>> cyclic_grouped_permutations(int n);

}  // namespace qpk
