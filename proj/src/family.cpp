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

#include "qpk/family.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <unordered_set>

#include "qpk/errors.hpp"

namespace qpk {

namespace {

std::string default_pair_display(int i, int j) {
  std::ostringstream os;
  if (i < 10 && j < 10) {
    os << "P_" << i << j;
  } else {
    os << "P_{" << i << "," << j << "}";
  }
  return os.str();
}

std::string digits_name(std::span<const int> digits) {
  std::string name;
  for (int d : digits) {
    name += std::to_string(d);
  }
  return name;
}

std::vector<Predicate> ordered_pair_tests(int n, bool include_diagonal) {
  std::vector<Predicate> tests;
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n; ++j) {
      if (i != j || include_diagonal) {
        tests.push_back(Predicate::pair(i, j));
      }
    }
  }
  return tests;
}

std::vector<Predicate> unordered_pair_tests(int n) {
  std::vector<Predicate> tests;
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) {
      tests.push_back(Predicate::pair(i, j));
    }
  }
  return tests;
}

}  // namespace

// PairSet

PairSet::PairSet(int n_particles) : n_(n_particles) {
  if (n_particles < 0) {
    throw DomainError("negative particle count");
  }
  bits_.assign(static_cast<std::size_t>(n_) * static_cast<std::size_t>(n_), false);
}

PairSet::PairSet(int n_particles, std::initializer_list<ParticlePair> pairs)
    : PairSet(n_particles) {
  for (const ParticlePair& p : pairs) {
    insert(p.first, p.second);
  }
}

bool PairSet::contains(int i, int j) const {
  if (i < 1 || j < 1 || i > n_ || j > n_) {
    return false;
  }
  return bits_[static_cast<std::size_t>(i - 1) * n_ + (j - 1)];
}

void PairSet::insert(int i, int j) {
  if (i < 1 || j < 1 || i > n_ || j > n_) {
    std::ostringstream os;
    os << "pair (" << i << "," << j << ") outside particles 1.." << n_;
    throw DomainError(os.str());
  }
  bits_[static_cast<std::size_t>(i - 1) * n_ + (j - 1)] = true;
}

std::size_t PairSet::count() const { return std::count(bits_.begin(), bits_.end(), true); }

bool PairSet::is_symmetric() const {
  for (int i = 1; i <= n_; ++i) {
    for (int j = i + 1; j <= n_; ++j) {
      if (contains(i, j) != contains(j, i)) {
        return false;
      }
    }
  }
  return true;
}

bool PairSet::has_diagonal() const {
  for (int i = 1; i <= n_; ++i) {
    if (contains(i, i)) {
      return true;
    }
  }
  return false;
}

std::vector<ParticlePair> PairSet::pairs() const {
  std::vector<ParticlePair> out;
  for (int i = 1; i <= n_; ++i) {
    for (int j = 1; j <= n_; ++j) {
      if (contains(i, j)) {
        out.push_back({i, j});
      }
    }
  }
  return out;
}

// Predicate

Predicate Predicate::pair(int i, int j, std::string display) {
  Predicate p;
  p.pair_ = ParticlePair{i, j};
  p.display_ = display.empty() ? default_pair_display(i, j) : std::move(display);
  return p;
}

Predicate Predicate::tuple_constraint(std::string name, TupleTest test) {
  Predicate p;
  p.display_ = std::move(name);
  p.tuple_test_ = std::move(test);
  return p;
}

Predicate Predicate::label_equals(std::string name, std::size_t index, int value) {
  return tuple_constraint(std::move(name), [index, value](std::span<const int> labels) {
    return index < labels.size() && labels[index] == value;
  });
}

bool Predicate::eval(const Configuration& c) const {
  if (pair_) {
    if (!c.is_relation()) {
      throw ApplicabilityError("pair test " + display_ + " applied to tuple configuration " +
                               c.name);
    }
    return c.pairs().contains(pair_->first, pair_->second);
  }
  if (c.is_relation()) {
    throw ApplicabilityError("tuple test " + display_ + " applied to relation configuration " +
                             c.name);
  }
  return tuple_test_(c.labels());
}

bool operator==(const Predicate& a, const Predicate& b) {
  if (a.pair_ || b.pair_) {
    return a.pair_ == b.pair_;
  }
  return a.display_ == b.display_;
}

bool eval_predicate(const Configuration& c, const Predicate& p) { return p.eval(c); }

// Family

Family::Family(std::string kind, int n_particles, std::vector<Configuration> configurations,
               std::vector<Predicate> test_universe, bool symmetric)
    : kind_(std::move(kind)),
      n_particles_(n_particles),
      configurations_(std::move(configurations)),
      test_universe_(std::move(test_universe)),
      symmetric_(symmetric) {
  if (n_particles_ < 1) {
    throw DomainError("family needs at least one particle");
  }
  if (configurations_.empty()) {
    throw DomainError("family needs at least one configuration");
  }
  const bool relations = configurations_.front().is_relation();
  const std::size_t tuple_length = relations ? 0 : configurations_.front().labels().size();
  for (std::size_t k = 0; k < configurations_.size(); ++k) {
    const Configuration& c = configurations_[k];
    if (c.name.empty()) {
      throw DomainError("configuration with empty name");
    }
    if (!index_.emplace(c.name, k).second) {
      throw DomainError("duplicate configuration name \"" + c.name + "\"");
    }
    if (c.is_relation() != relations) {
      throw DomainError("family mixes relation and tuple configurations");
    }
    if (relations) {
      if (c.pairs().n_particles() != n_particles_) {
        throw DomainError("configuration \"" + c.name + "\" is not a relation on " +
                          std::to_string(n_particles_) + " particles");
      }
      if (symmetric_ && !c.pairs().is_symmetric()) {
        throw DomainError("configuration \"" + c.name + "\" is not symmetric");
      }
    } else if (c.labels().size() != tuple_length) {
      throw DomainError("configuration \"" + c.name + "\" has a different tuple length");
    }
  }
  for (const Predicate& p : test_universe_) {
    check_applicable(p);
  }
}

std::optional<std::size_t> Family::index_of(std::string_view name) const {
  auto it = index_.find(std::string(name));
  if (it == index_.end()) {
    return std::nullopt;
  }
  return it->second;
}

void Family::check_applicable(const Predicate& p) const {
  if (p.is_pair()) {
    if (!is_relation_family()) {
      throw ApplicabilityError("pair test " + p.display() + " on a tuple family");
    }
    const auto [i, j] = p.particles();
    if (i < 1 || j < 1 || i > n_particles_ || j > n_particles_) {
      throw ApplicabilityError("pair test " + p.display() + " outside particles 1.." +
                               std::to_string(n_particles_));
    }
    if (symmetric_ && i == j) {
      throw ApplicabilityError("pair test " + p.display() +
                               " relates a particle to itself in a symmetric family");
    }
  } else if (is_relation_family()) {
    throw ApplicabilityError("tuple test " + p.display() + " on a relation family");
  }
}

Predicate Family::pair_test(int i, int j) const {
  check_applicable(Predicate::pair(i, j));
  for (const Predicate& p : test_universe_) {
    if (p.is_pair() && p.particles() == ParticlePair{i, j}) {
      return p;
    }
  }
  if (symmetric_) {
    for (const Predicate& p : test_universe_) {
      if (p.is_pair() && p.particles() == ParticlePair{j, i}) {
        return p;
      }
    }
  }
  return Predicate::pair(i, j);
}

const Predicate* Family::find_test(std::string_view display) const {
  for (const Predicate& p : test_universe_) {
    if (p.display() == display) {
      return &p;
    }
  }
  return nullptr;
}

bool Family::same_structure(const Family& other) const {
  if (n_particles_ != other.n_particles_ || configurations_ != other.configurations_ ||
      test_universe_.size() != other.test_universe_.size()) {
    return false;
  }
  return std::all_of(test_universe_.begin(), test_universe_.end(), [&](const Predicate& p) {
    return std::find(other.test_universe_.begin(), other.test_universe_.end(), p) !=
           other.test_universe_.end();
  });
}

// Generators

std::vector<std::vector<int>> cyclic_grouped_permutations(int n) {
  std::vector<int> rest(n - 1);
  std::iota(rest.begin(), rest.end(), 2);
  std::vector<std::vector<int>> out;
  do {
    std::vector<int> base{1};
    base.insert(base.end(), rest.begin(), rest.end());
    for (int shift = 0; shift < n; ++shift) {
      std::vector<int> relabeled(base.size());
      std::transform(base.begin(), base.end(), relabeled.begin(),
                     [&](int d) { return (d - 1 + shift) % n + 1; });
      out.push_back(std::move(relabeled));
    }
  } while (std::next_permutation(rest.begin(), rest.end()));
  return out;
}

Family make_togetherness3() {
  std::vector<Configuration> configs;
  PairSet t(3);
  t.insert_symmetric(1, 2);
  t.insert_symmetric(2, 3);
  t.insert_symmetric(1, 3);
  configs.push_back({"t", t});
  // a_k: particle k alone, the other two together.
  const ParticlePair together[] = {{2, 3}, {1, 3}, {1, 2}};
  for (int k = 1; k <= 3; ++k) {
    PairSet a(3);
    a.insert_symmetric(together[k - 1].first, together[k - 1].second);
    configs.push_back({"a" + std::to_string(k), a});
  }
  std::vector<Predicate> tests{Predicate::pair(1, 2), Predicate::pair(2, 3),
                               Predicate::pair(1, 3)};
  return Family("togetherness3", 3, std::move(configs), std::move(tests), true);
}

Family make_total_orders(int n) {
  if (n < 2 || n > 8) {
    throw DomainError("total_orders needs 2 <= n <= 8, got " + std::to_string(n));
  }
  std::vector<Configuration> configs;
  for (const std::vector<int>& order : cyclic_grouped_permutations(n)) {
    // order[rank] is the particle with the rank-th lowest energy.
    std::vector<int> rank(n + 1);
    for (int r = 0; r < n; ++r) {
      rank[order[r]] = r;
    }
    PairSet pairs(n);
    for (int i = 1; i <= n; ++i) {
      for (int j = 1; j <= n; ++j) {
        if (rank[i] < rank[j]) {
          pairs.insert(i, j);
        }
      }
    }
    configs.push_back({digits_name(order), std::move(pairs)});
  }
  return Family("total_orders", n, std::move(configs), ordered_pair_tests(n, false), false);
}

Family make_one_to_one_functions(int n) {
  if (n < 2 || n > 8) {
    throw DomainError("one_to_one_functions needs 2 <= n <= 8, got " + std::to_string(n));
  }
  std::vector<Configuration> configs;
  for (const std::vector<int>& values : cyclic_grouped_permutations(n)) {
    PairSet pairs(n);
    for (int k = 1; k <= n; ++k) {
      pairs.insert(k, values[k - 1]);
    }
    configs.push_back({digits_name(values), std::move(pairs)});
  }
  std::vector<Predicate> tests;
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n; ++j) {
      tests.push_back(
          Predicate::pair(i, j, "r(" + std::to_string(i) + ")=" + std::to_string(j)));
    }
  }
  return Family("one_to_one_functions", n, std::move(configs), std::move(tests), false);
}

Family make_star_graphs(int n) {
  if (n < 3) {
    throw DomainError("star_graphs needs n >= 3, got " + std::to_string(n));
  }
  std::vector<Configuration> configs;
  for (int center = 1; center <= n; ++center) {
    PairSet pairs(n);
    for (int m = 1; m <= n; ++m) {
      if (m != center) {
        pairs.insert_symmetric(center, m);
      }
    }
    configs.push_back({"r_" + std::to_string(center), std::move(pairs)});
  }
  return Family("star_graphs", n, std::move(configs), unordered_pair_tests(n), true);
}

Family make_lr_strings(int n) {
  if (n < 1 || n > 20) {
    throw DomainError("lr_strings needs 1 <= n <= 20, got " + std::to_string(n));
  }
  std::vector<Configuration> configs;
  const unsigned long long count = 1ULL << n;
  configs.reserve(count);
  for (unsigned long long bits = 0; bits < count; ++bits) {
    std::string name(n, 'L');
    for (int k = 0; k < n; ++k) {
      if (bits >> (n - 1 - k) & 1ULL) {
        name[k] = 'R';
      }
    }
    PairSet pairs(n);
    for (int i = 1; i <= n; ++i) {
      for (int j = i + 1; j <= n; ++j) {
        if (name[i - 1] == name[j - 1]) {
          pairs.insert_symmetric(i, j);
        }
      }
    }
    configs.push_back({std::move(name), std::move(pairs)});
  }
  return Family("lr_strings", n, std::move(configs), unordered_pair_tests(n), true);
}

Family make_ternary_energy() {
  const LabelTuple energies[] = {{0, 0, 0}, {1, 0, 1}, {0, 1, 1},
                                 {1, 1, 2}, {2, 0, 2}, {0, 2, 2}};
  std::vector<Configuration> configs;
  for (const LabelTuple& e : energies) {
    configs.push_back({digits_name(e), e});
  }
  std::vector<Predicate> tests{Predicate::label_equals("E_a=1", 0, 1),
                               Predicate::label_equals("E_b=1", 1, 1),
                               Predicate::label_equals("E_c=2", 2, 2)};
  return Family("ternary_energy", 3, std::move(configs), std::move(tests), false);
}

PairSet relation_from_mask(int n, unsigned long long mask) {
  PairSet pairs(n);
  int bit = 0;
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n; ++j, ++bit) {
      if (mask >> bit & 1ULL) {
        pairs.insert(i, j);
      }
    }
  }
  return pairs;
}

std::string relation_name(const PairSet& pairs) {
  std::string name = "{";
  bool first = true;
  for (const ParticlePair& p : pairs.pairs()) {
    if (!first) {
      name += ",";
    }
    first = false;
    name += "(" + std::to_string(p.first) + "," + std::to_string(p.second) + ")";
  }
  return name + "}";
}

Family make_all_relations(int n) {
  if (n < 1) {
    throw DomainError("all_relations needs n >= 1");
  }
  if (n > 2) {
    throw SizeError("all_relations on " + std::to_string(n) +
                    " particles has 2^" + std::to_string(n * n) +
                    " configurations; use the sampled min-family experiment instead");
  }
  std::vector<Configuration> configs;
  const unsigned long long count = 1ULL << (n * n);
  for (unsigned long long mask = 0; mask < count; ++mask) {
    PairSet pairs = relation_from_mask(n, mask);
    configs.push_back({relation_name(pairs), std::move(pairs)});
  }
  return Family("all_relations", n, std::move(configs), ordered_pair_tests(n, true), false);
}

}  // namespace qpk
