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

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "qpk/family.hpp"
#include "qpk/inference.hpp"
#include "qpk/paradox.hpp"

namespace qpk {

/// Integer grid of candidate coefficients: [-c, c] per entry, or Gaussian integers a+bi with
/// |a|, |b| <= c when `include_imaginary`.
struct GridSpec {
  int max_coeff = 1;
  bool include_imaginary = false;
  /// Keep one representative per class of vectors related by nonzero rational scaling.
  bool skip_scalar_multiples = true;
};

/// Default cap on classification calls (candidate vectors times tests).
inline constexpr std::uint64_t kDefaultBudget = 10'000'000;

struct SearchOptions {
  std::uint64_t budget = kDefaultBudget;
  /// 0 picks std::thread::hardware_concurrency().
  unsigned threads = 0;
  /// Also enumerate Psi over the same grid instead of fixing it.
  bool search_psi = false;
};

/// Gaussian integer grid entry.
struct GridEntry {
  long re = 0;
  long im = 0;
  friend bool operator==(const GridEntry&, const GridEntry&) = default;
};

/// Lexicographic enumeration of coefficient vectors of a fixed dimension. Entries range from
/// -c to c (real part first for Gaussian entries) and the first entry is most significant.
class CoefficientGrid {
 public:
  /// Throws DomainError for c < 1 or dimension 0.
  CoefficientGrid(std::size_t dimension, GridSpec spec);

  std::size_t dimension() const { return dimension_; }
  const GridSpec& spec() const { return spec_; }
  /// Number of raw grid points including the zero vector, saturated at UINT64_MAX.
  std::uint64_t raw_size() const { return raw_size_; }

  /// Writes grid point `index` into `out`. Returns false when the point is skipped: the zero
  /// vector, or (with skip_scalar_multiples) any vector that is not the lexicographically
  /// first member of its scaling class.
  bool decode(std::uint64_t index, std::vector<GridEntry>& out) const;
  /// Whether `v` is the lexicographically first grid member of its scaling class.
  bool is_canonical(std::span<const GridEntry> v) const;

  static std::vector<ComplexRational> to_coeffs(std::span<const GridEntry> v);

 private:
  std::size_t dimension_;
  GridSpec spec_;
  std::uint64_t base_;
  std::uint64_t raw_size_;
};

/// Every retained grid vector for the family's dimension, in enumeration order. Throws
/// BudgetError when the raw grid exceeds `budget`.
std::vector<std::vector<ComplexRational>> enumerate_phis(const Family& family, const GridSpec& grid,
                                                         std::uint64_t budget = kDefaultBudget);

struct ParadoxHit {
  std::vector<ComplexRational> phi;
  std::vector<ComplexRational> psi;
  ComplexRational s;
  Knowledge knowledge;
  Verdict verdict;
};

struct SearchResult {
  std::vector<ParadoxHit> hits;
  /// Grid vectors examined (after scaling deduplication).
  std::uint64_t candidates = 0;
  /// Candidates with <Phi|Psi> != 0.
  std::uint64_t overlapping = 0;
};

/// Runs every retained grid Phi against Psi (uniform when absent) and keeps the paradoxical
/// ones, in enumeration order regardless of the thread count. Throws BudgetError when
/// candidates times tests exceeds the budget.
SearchResult search_paradoxes(const FamilyPtr& family, std::span<const Predicate> tests,
                              const GridSpec& grid, const std::optional<StateVector>& psi = {},
                              const SearchOptions& options = {});

std::vector<ParadoxHit> find_paradoxes(const FamilyPtr& family, std::span<const Predicate> tests,
                                       const GridSpec& grid,
                                       const std::optional<StateVector>& psi = {},
                                       const SearchOptions& options = {});

struct MinFamilyReport {
  int n_particles = 0;
  GridSpec grid;
  std::uint64_t relations = 0;
  std::uint64_t families_total = 0;
  std::uint64_t families_checked = 0;
  /// Set when the budget forced a deterministic stride sample of the families.
  bool sampled = false;
  std::uint64_t stride = 1;
  std::uint64_t overlapping_phis = 0;
  std::uint64_t paradoxes = 0;
  /// Member names of every family that produced a paradox.
  std::vector<std::string> paradox_families;
};

/// Every family of one or two relations on n <= 3 particles, tested against every grid Phi
/// with <Phi|Psi> != 0 over all n^2 ordered-pair tests. Families are ordered singletons
/// first, then pairs (a, b), a < b, lexicographically by relation bitmask. When the full run
/// would exceed the budget every stride-th family is taken.
MinFamilyReport min_family_experiment(int n, const GridSpec& grid,
                                      std::uint64_t budget = kDefaultBudget,
                                      unsigned threads = 0);

/// Candidate relations on three particles: star graphs, togetherness relations and total
/// orders, named "star:r_1", "tog:t", "ord:123", ...
std::vector<Configuration> three_particle_pool();

struct MinimalHit {
  std::vector<std::string> members;
  FamilyPtr family;
  ParadoxHit hit;
};

/// All three-relation families drawn from three_particle_pool(), searched over the six
/// ordered pair tests on distinct particles.
std::vector<MinimalHit> three_relation_minimal_search(const GridSpec& grid,
                                                      const SearchOptions& options = {});

}  // namespace qpk
