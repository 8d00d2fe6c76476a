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

#include "qpk/paradox.hpp"

#include <algorithm>
#include <numeric>

#include "qpk/errors.hpp"

namespace qpk {

Verdict check_consistency(const Family& family, const Knowledge& knowledge) {
  Verdict verdict;
  for (const Configuration& c : family.configurations()) {
    ++verdict.checked_count;
    const bool fits =
        std::all_of(knowledge.affirmed.begin(), knowledge.affirmed.end(),
                    [&](const Predicate& p) { return p.eval(c); }) &&
        std::none_of(knowledge.denied.begin(), knowledge.denied.end(),
                     [&](const Predicate& p) { return p.eval(c); });
    if (fits) {
      verdict.kind = Verdict::Kind::kConsistent;
      verdict.witness = c.name;
      return verdict;
    }
  }
  verdict.kind = Verdict::Kind::kParadoxical;
  return verdict;
}

BasisReport check_unconditional(const Family& family, const StateVector& psi,
                                std::span<const StateVector> basis,
                                std::span<const Predicate> tests,
                                std::span<const std::string> labels) {
  if (!labels.empty() && labels.size() != basis.size()) {
    throw DomainError("basis labels do not match the basis size");
  }
  for (const StateVector& b : basis) {
    if (!b.family()->same_structure(family)) {
      throw FamilyMismatchError("basis vector over a different family");
    }
  }
  BasisReport report;
  report.orthogonal = true;
  for (std::size_t a = 0; a < basis.size() && report.orthogonal; ++a) {
    for (std::size_t b = a + 1; b < basis.size(); ++b) {
      if (!inner(basis[a], basis[b]).is_zero()) {
        report.orthogonal = false;
        break;
      }
    }
  }
  report.all_paradoxical = true;
  for (std::size_t k = 0; k < basis.size(); ++k) {
    BasisOutcome outcome;
    outcome.label = labels.empty() ? "Phi_" + std::to_string(k + 1) : labels[k];
    outcome.s = inner(basis[k], psi);
    if (!outcome.s.is_zero()) {
      outcome.knowledge = extract_knowledge(basis[k], psi, tests);
      outcome.verdict = check_consistency(family, *outcome.knowledge);
      report.all_paradoxical = report.all_paradoxical && outcome.verdict->paradoxical();
    }
    report.per_outcome.push_back(std::move(outcome));
  }
  return report;
}

namespace {

using Adjacency = std::vector<std::vector<bool>>;

class CliqueSearch {
 public:
  explicit CliqueSearch(const Adjacency& adj) : adj_(adj) {}

  std::vector<int> run() {
    std::vector<int> candidates(adj_.size());
    std::iota(candidates.begin(), candidates.end(), 0);
    std::vector<int> current;
    expand(current, candidates);
    return best_;
  }

 private:
  void expand(std::vector<int>& current, const std::vector<int>& candidates) {
    if (current.size() > best_.size()) {
      best_ = current;
    }
    for (std::size_t k = 0; k < candidates.size(); ++k) {
      if (current.size() + (candidates.size() - k) <= best_.size()) {
        return;
      }
      const int v = candidates[k];
      std::vector<int> next;
      for (std::size_t m = k + 1; m < candidates.size(); ++m) {
        if (adj_[v][candidates[m]]) {
          next.push_back(candidates[m]);
        }
      }
      current.push_back(v);
      expand(current, next);
      current.pop_back();
    }
  }

  const Adjacency& adj_;
  std::vector<int> best_;
};

class Colorer {
 public:
  Colorer(const Adjacency& adj, int colors) : adj_(adj), colors_(colors) {
    order_.resize(adj.size());
    std::iota(order_.begin(), order_.end(), 0);
    auto degree = [&](int v) { return std::count(adj_[v].begin(), adj_[v].end(), true); };
    std::stable_sort(order_.begin(), order_.end(),
                     [&](int a, int b) { return degree(a) > degree(b); });
    assignment_.assign(adj.size(), -1);
  }

  bool colorable() { return place(0, 0); }

 private:
  bool place(std::size_t position, int used) {
    if (position == order_.size()) {
      return true;
    }
    const int v = order_[position];
    // A vertex never needs a color beyond the first unused one.
    const int limit = std::min(colors_, used + 1);
    for (int color = 0; color < limit; ++color) {
      bool clash = false;
      for (std::size_t u = 0; u < adj_.size() && !clash; ++u) {
        clash = adj_[v][u] && assignment_[u] == color;
      }
      if (clash) {
        continue;
      }
      assignment_[v] = color;
      if (place(position + 1, std::max(used, color + 1))) {
        return true;
      }
      assignment_[v] = -1;
    }
    return false;
  }

  const Adjacency& adj_;
  int colors_;
  std::vector<int> order_;
  std::vector<int> assignment_;
};

}  // namespace

ChromaticReport analyze_coloring(const Knowledge& knowledge, int n) {
  if (n < 1) {
    throw DomainError("coloring needs at least one particle");
  }
  if (n > kMaxColoringParticles) {
    throw SizeError("exact coloring is limited to " + std::to_string(kMaxColoringParticles) +
                    " particles, got " + std::to_string(n));
  }
  ChromaticReport report;
  Adjacency adj(n, std::vector<bool>(n, false));
  for (const Predicate& p : knowledge.affirmed) {
    if (!p.is_pair()) {
      throw ApplicabilityError("coloring needs pair predicates, got " + p.display());
    }
    auto [i, j] = p.particles();
    if (i < 1 || j < 1 || i > n || j > n) {
      throw ApplicabilityError("affirmed pair " + p.display() + " outside particles 1.." +
                               std::to_string(n));
    }
    if (i == j) {
      continue;
    }
    if (i > j) {
      std::swap(i, j);
    }
    if (!adj[i - 1][j - 1]) {
      adj[i - 1][j - 1] = adj[j - 1][i - 1] = true;
      report.edges.push_back({i, j});
    }
  }
  for (int v : CliqueSearch(adj).run()) {
    report.clique.push_back(v + 1);
  }
  report.clique_size = static_cast<int>(report.clique.size());
  for (int colors = std::max(1, report.clique_size);; ++colors) {
    if (Colorer(adj, colors).colorable()) {
      report.chromatic_number = colors;
      break;
    }
  }
  return report;
}

StarScenario starN_scenario(int n) {
  if (n < 4) {
    throw DomainError("star scenario needs n >= 4, got " + std::to_string(n));
  }
  FamilyPtr family = share(make_star_graphs(n));
  std::vector<ComplexRational> phi(n, ComplexRational(1));
  phi.back() = ComplexRational(-(n - 3));
  StateVector psi = uniform_psi(family);
  StateVector phi_vec(family, std::move(phi));
  return {family, std::move(psi), std::move(phi_vec)};
}

}  // namespace qpk
