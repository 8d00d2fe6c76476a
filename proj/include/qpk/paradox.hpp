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

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "qpk/family.hpp"
#include "qpk/inference.hpp"

namespace qpk {

/// Outcome of searching R for a relation compatible with some knowledge.
struct Verdict {
  enum class Kind { kConsistent, kParadoxical };

  Kind kind = Kind::kParadoxical;
  /// Name of the first compatible configuration, when consistent.
  std::optional<std::string> witness;
  /// Configurations examined. Equals |R| for a paradox.
  std::size_t checked_count = 0;

  bool paradoxical() const { return kind == Kind::kParadoxical; }
};

/// Scans the family in order for a configuration satisfying every affirmed predicate and
/// no denied predicate. Uncertain predicates are ignored.
Verdict check_consistency(const Family& family, const Knowledge& knowledge);

struct BasisOutcome {
  std::string label;
  ComplexRational s;
  /// Present only when s != 0.
  std::optional<Knowledge> knowledge;
  std::optional<Verdict> verdict;
};

struct BasisReport {
  bool orthogonal = false;
  std::vector<BasisOutcome> per_outcome;
  /// Every outcome with s != 0 is paradoxical.
  bool all_paradoxical = false;
};

/// Checks a complete final measurement: whether the basis is pairwise orthogonal and what
/// each possible outcome teaches. Non-orthogonality is reported, not thrown. `labels` may
/// be empty, in which case outcomes are named Phi_1, Phi_2, ...
BasisReport check_unconditional(const Family& family, const StateVector& psi,
                                std::span<const StateVector> basis,
                                std::span<const Predicate> tests,
                                std::span<const std::string> labels = {});

struct ChromaticReport {
  /// Affirmed pairs as undirected edges (i < j), deduplicated, in first-seen order.
  std::vector<ParticlePair> edges;
  std::vector<int> clique;
  int clique_size = 0;
  int chromatic_number = 0;
  bool violates_four_color_bound() const { return chromatic_number > 4; }
};

/// Largest particle count accepted by analyze_coloring.
inline constexpr int kMaxColoringParticles = 10;

/// Builds the graph of affirmed pairs on particles 1..n and computes a maximum clique and the
/// exact chromatic number. Self-pairs are ignored. Throws SizeError for n > 10 and
/// ApplicabilityError when an affirmed predicate is not a pair on 1..n.
ChromaticReport analyze_coloring(const Knowledge& knowledge, int n);

struct StarScenario {
  FamilyPtr family;
  StateVector psi;
  StateVector phi;
};

/// Star graphs on n >= 4 particles with uniform Psi and phi_1 = ... = phi_{n-1} = 1,
/// phi_n = -(n-3), so <Phi|Psi> = 2 and the first n-1 particles form an affirmed clique.
StarScenario starN_scenario(int n);

}  // namespace qpk
