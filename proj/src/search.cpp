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

#include "qpk/search.hpp"

#include <algorithm>
#include <exception>
#include <functional>
#include <limits>
#include <numeric>
#include <thread>
#include <variant>

#include "qpk/errors.hpp"

namespace qpk {

namespace {

constexpr std::uint64_t kSaturated = std::numeric_limits<std::uint64_t>::max();

std::uint64_t saturating_mul(std::uint64_t a, std::uint64_t b) {
  if (a != 0 && b > kSaturated / a) {
    return kSaturated;
  }
  return a * b;
}

std::uint64_t saturating_add(std::uint64_t a, std::uint64_t b) {
  return a > kSaturated - b ? kSaturated : a + b;
}

unsigned resolve_threads(unsigned requested, std::uint64_t work) {
  unsigned t = requested == 0 ? std::max(1u, std::thread::hardware_concurrency()) : requested;
  if (work < 256) {
    t = 1;
  }
  return static_cast<unsigned>(std::min<std::uint64_t>(t, std::max<std::uint64_t>(work, 1)));
}

/// Splits [0, n) into `threads` contiguous chunks and runs `body(begin, end, chunk)` on each.
/// The first exception thrown by any worker is rethrown.
void run_chunks(std::uint64_t n, unsigned threads,
                const std::function<void(std::uint64_t, std::uint64_t, unsigned)>& body) {
  if (threads <= 1) {
    body(0, n, 0);
    return;
  }
  std::vector<std::exception_ptr> errors(threads);
  std::vector<std::thread> workers;
  const std::uint64_t step = n / threads;
  const std::uint64_t extra = n % threads;
  std::uint64_t begin = 0;
  for (unsigned t = 0; t < threads; ++t) {
    const std::uint64_t end = begin + step + (t < extra ? 1 : 0);
    workers.emplace_back([&, begin, end, t] {
      try {
        body(begin, end, t);
      } catch (...) {
        errors[t] = std::current_exception();
      }
    });
    begin = end;
  }
  for (std::thread& w : workers) {
    w.join();
  }
  for (const std::exception_ptr& e : errors) {
    if (e) {
      std::rethrow_exception(e);
    }
  }
}

/// Exact Gaussian integer in 64 bits. Only used when a bound check proves no intermediate
/// value can overflow.
struct SmallGaussian {
  std::int64_t re = 0;
  std::int64_t im = 0;

  SmallGaussian& operator+=(const SmallGaussian& o) {
    re += o.re;
    im += o.im;
    return *this;
  }
  bool is_zero() const { return re == 0 && im == 0; }
  friend bool operator==(const SmallGaussian&, const SmallGaussian&) = default;
  ComplexRational to_complex() const {
    return {Rational(static_cast<long>(re)), Rational(static_cast<long>(im))};
  }
};

SmallGaussian conj_times(const GridEntry& phi, const SmallGaussian& psi) {
  // conj(a + bi) * (c + di) = (ac + bd) + (ad - bc)i
  return {phi.re * psi.re + phi.im * psi.im, phi.re * psi.im - phi.im * psi.re};
}

ComplexRational conj_times(const GridEntry& phi, const ComplexRational& psi) {
  return conjugate(ComplexRational(Rational(phi.re), Rational(phi.im))) * psi;
}

ComplexRational to_complex(const ComplexRational& z) { return z; }
ComplexRational to_complex(const SmallGaussian& z) { return z.to_complex(); }

enum class Status { kNonOverlapping, kConsistent, kParadoxical };

struct Detail {
  ComplexRational s;
  std::vector<ComplexRational> x;
  std::vector<TestVerdict> verdicts;
};

/// Classifies grid vectors against one Psi using a precomputed truth table.
template <typename Scalar>
class Evaluator {
 public:
  Evaluator(const std::vector<std::vector<char>>& truth, std::vector<Scalar> psi,
            std::size_t n_tests)
      : truth_(truth), psi_(std::move(psi)), n_tests_(n_tests) {}

  Status run(std::span<const GridEntry> phi, Detail* detail) const {
    const std::size_t m = psi_.size();
    std::vector<Scalar> w(m);
    Scalar s{};
    for (std::size_t r = 0; r < m; ++r) {
      if (phi[r].re == 0 && phi[r].im == 0) {
        continue;
      }
      w[r] = conj_times(phi[r], psi_[r]);
      s += w[r];
    }
    if (s.is_zero()) {
      return Status::kNonOverlapping;
    }
    std::vector<TestVerdict> verdicts(n_tests_);
    std::vector<Scalar> xs(detail ? n_tests_ : 0);
    for (std::size_t t = 0; t < n_tests_; ++t) {
      Scalar x{};
      for (std::size_t r = 0; r < m; ++r) {
        if (truth_[r][t]) {
          x += w[r];
        }
      }
      if (x == s) {
        verdicts[t] = TestVerdict::kAffirmed;
      } else if (x.is_zero()) {
        verdicts[t] = TestVerdict::kDenied;
      } else {
        verdicts[t] = TestVerdict::kUncertain;
      }
      if (detail) {
        xs[t] = std::move(x);
      }
    }
    for (std::size_t r = 0; r < m; ++r) {
      bool fits = true;
      for (std::size_t t = 0; t < n_tests_ && fits; ++t) {
        fits = verdicts[t] == TestVerdict::kUncertain ||
               (verdicts[t] == TestVerdict::kAffirmed) == static_cast<bool>(truth_[r][t]);
      }
      if (fits) {
        return Status::kConsistent;
      }
    }
    if (detail) {
      detail->s = to_complex(s);
      detail->x.clear();
      for (const Scalar& x : xs) {
        detail->x.push_back(to_complex(x));
      }
      detail->verdicts = std::move(verdicts);
    }
    return Status::kParadoxical;
  }

 private:
  const std::vector<std::vector<char>>& truth_;
  std::vector<Scalar> psi_;
  std::size_t n_tests_;
};

/// Picks the 64-bit evaluator when every Psi entry is a Gaussian integer and the worst-case
/// sum |R| * 2 * c * max|psi| stays below 2^62; the GMP evaluator otherwise.
class Engine {
 public:
  Engine(const std::vector<std::vector<char>>& truth, std::span<const ComplexRational> psi,
         std::size_t n_tests, int max_coeff) {
    bool integral = true;
    __int128 largest = 0;
    for (const ComplexRational& z : psi) {
      if (!z.re().is_integer() || !z.im().is_integer() || !z.re().numerator().fits_slong_p() ||
          !z.im().numerator().fits_slong_p()) {
        integral = false;
        break;
      }
      for (const Rational* part : {&z.re(), &z.im()}) {
        __int128 v = part->numerator().get_si();
        largest = std::max(largest, v < 0 ? -v : v);
      }
    }
    const __int128 bound = static_cast<__int128>(psi.size()) * 2 * max_coeff * largest;
    if (integral && bound < (static_cast<__int128>(1) << 62)) {
      std::vector<SmallGaussian> small;
      for (const ComplexRational& z : psi) {
        small.push_back({z.re().numerator().get_si(), z.im().numerator().get_si()});
      }
      impl_.emplace<Evaluator<SmallGaussian>>(truth, std::move(small), n_tests);
    } else {
      impl_.emplace<Evaluator<ComplexRational>>(
          truth, std::vector<ComplexRational>(psi.begin(), psi.end()), n_tests);
    }
  }

  Status run(std::span<const GridEntry> phi, Detail* detail) const {
    return std::visit(
        [&](const auto& e) -> Status {
          if constexpr (std::is_same_v<std::decay_t<decltype(e)>, std::monostate>) {
            return Status::kNonOverlapping;
          } else {
            return e.run(phi, detail);
          }
        },
        impl_);
  }

 private:
  std::variant<std::monostate, Evaluator<SmallGaussian>, Evaluator<ComplexRational>> impl_;
};

std::vector<std::vector<char>> truth_table(const Family& family, std::span<const Predicate> tests) {
  std::vector<std::vector<char>> truth(family.size(), std::vector<char>(tests.size(), 0));
  for (std::size_t r = 0; r < family.size(); ++r) {
    for (std::size_t t = 0; t < tests.size(); ++t) {
      truth[r][t] = tests[t].eval(family[r]) ? 1 : 0;
    }
  }
  return truth;
}

ParadoxHit make_hit(std::span<const GridEntry> phi, std::span<const ComplexRational> psi,
                    std::span<const Predicate> tests, Detail detail, std::size_t family_size) {
  ParadoxHit hit;
  hit.phi = CoefficientGrid::to_coeffs(phi);
  hit.psi.assign(psi.begin(), psi.end());
  hit.s = detail.s;
  for (std::size_t t = 0; t < tests.size(); ++t) {
    TestOutcome outcome{tests[t], detail.x[t], detail.s - detail.x[t], detail.s,
                        detail.verdicts[t]};
    switch (outcome.verdict) {
      case TestVerdict::kAffirmed:
        hit.knowledge.affirmed.push_back(tests[t]);
        break;
      case TestVerdict::kDenied:
        hit.knowledge.denied.push_back(tests[t]);
        break;
      case TestVerdict::kUncertain:
        hit.knowledge.uncertain.push_back(tests[t]);
        break;
    }
    hit.knowledge.outcomes.push_back(std::move(outcome));
  }
  hit.verdict.kind = Verdict::Kind::kParadoxical;
  hit.verdict.checked_count = family_size;
  return hit;
}

std::uint64_t choose(std::uint64_t n, std::uint64_t k) {
  std::uint64_t r = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    r = r * (n - k + i) / i;
  }
  return r;
}

}  // namespace

// CoefficientGrid

CoefficientGrid::CoefficientGrid(std::size_t dimension, GridSpec spec)
    : dimension_(dimension), spec_(spec) {
  if (spec_.max_coeff < 1) {
    throw DomainError("grid bound c must be positive");
  }
  if (dimension_ == 0) {
    throw DomainError("grid over an empty family");
  }
  const std::uint64_t side = 2 * static_cast<std::uint64_t>(spec_.max_coeff) + 1;
  base_ = spec_.include_imaginary ? side * side : side;
  raw_size_ = 1;
  for (std::size_t k = 0; k < dimension_; ++k) {
    raw_size_ = saturating_mul(raw_size_, base_);
  }
}

bool CoefficientGrid::decode(std::uint64_t index, std::vector<GridEntry>& out) const {
  out.resize(dimension_);
  const long c = spec_.max_coeff;
  const std::uint64_t side = 2 * static_cast<std::uint64_t>(c) + 1;
  bool nonzero = false;
  for (std::size_t k = dimension_; k-- > 0;) {
    const std::uint64_t digit = index % base_;
    index /= base_;
    if (spec_.include_imaginary) {
      out[k] = {static_cast<long>(digit / side) - c, static_cast<long>(digit % side) - c};
    } else {
      out[k] = {static_cast<long>(digit) - c, 0};
    }
    nonzero = nonzero || out[k].re != 0 || out[k].im != 0;
  }
  if (!nonzero) {
    return false;
  }
  return !spec_.skip_scalar_multiples || is_canonical(out);
}

bool CoefficientGrid::is_canonical(std::span<const GridEntry> v) const {
  // Rational multiples of an integer vector inside the grid are k * p for the primitive
  // vector p and integers 0 < |k| <= c / max|p|. The lexicographically first of them has
  // the largest |k| and a negative leading entry.
  long g = 0;
  long largest = 0;
  long leading = 0;
  for (const GridEntry& e : v) {
    for (long part : {e.re, e.im}) {
      g = std::gcd(g, std::abs(part));
      largest = std::max(largest, std::abs(part));
      if (leading == 0) {
        leading = part;
      }
    }
  }
  if (g == 0) {
    return false;
  }
  const long k_max = spec_.max_coeff / (largest / g);
  return leading < 0 && g == k_max;
}

std::vector<ComplexRational> CoefficientGrid::to_coeffs(std::span<const GridEntry> v) {
  std::vector<ComplexRational> out;
  out.reserve(v.size());
  for (const GridEntry& e : v) {
    out.emplace_back(Rational(e.re), Rational(e.im));
  }
  return out;
}

std::vector<std::vector<ComplexRational>> enumerate_phis(const Family& family, const GridSpec& grid,
                                                         std::uint64_t budget) {
  CoefficientGrid g(family.size(), grid);
  if (g.raw_size() > budget) {
    throw BudgetError("grid of " + std::to_string(g.raw_size()) +
                          " vectors exceeds the budget of " + std::to_string(budget),
                      g.raw_size());
  }
  std::vector<std::vector<ComplexRational>> out;
  std::vector<GridEntry> v;
  for (std::uint64_t i = 0; i < g.raw_size(); ++i) {
    if (g.decode(i, v)) {
      out.push_back(CoefficientGrid::to_coeffs(v));
    }
  }
  return out;
}

// Search

SearchResult search_paradoxes(const FamilyPtr& family, std::span<const Predicate> tests,
                              const GridSpec& grid, const std::optional<StateVector>& psi,
                              const SearchOptions& options) {
  for (const Predicate& p : tests) {
    family->check_applicable(p);
  }
  if (psi && !(psi->family() == family || *psi->family() == *family)) {
    throw FamilyMismatchError("psi belongs to a different family");
  }
  const CoefficientGrid g(family->size(), grid);
  std::uint64_t work = saturating_mul(g.raw_size(), std::max<std::uint64_t>(1, tests.size()));
  if (options.search_psi) {
    work = saturating_mul(work, g.raw_size());
  }
  if (work > options.budget) {
    throw BudgetError("search needs " + std::to_string(work) +
                          " classification calls, over the budget of " +
                          std::to_string(options.budget),
                      work);
  }

  const auto truth = truth_table(*family, tests);
  const std::uint64_t outer = options.search_psi ? g.raw_size() : 1;
  const std::uint64_t total = saturating_mul(outer, g.raw_size());
  const unsigned threads = resolve_threads(options.threads, total);

  struct Chunk {
    std::vector<ParadoxHit> hits;
    std::uint64_t candidates = 0;
    std::uint64_t overlapping = 0;
  };
  std::vector<Chunk> chunks(threads);

  const std::vector<ComplexRational> fixed_psi =
      psi ? std::vector<ComplexRational>(psi->coeffs().begin(), psi->coeffs().end())
          : std::vector<ComplexRational>(family->size(), ComplexRational(1));

  run_chunks(total, threads, [&](std::uint64_t begin, std::uint64_t end, unsigned chunk_id) {
    Chunk& chunk = chunks[chunk_id];
    std::vector<GridEntry> phi;
    std::vector<GridEntry> psi_entries;
    std::vector<ComplexRational> psi_coeffs = fixed_psi;
    std::optional<Engine> engine;
    std::uint64_t engine_for = kSaturated;
    for (std::uint64_t index = begin; index < end; ++index) {
      const std::uint64_t psi_index = index / g.raw_size();
      if (options.search_psi) {
        if (!g.decode(psi_index, psi_entries)) {
          index = (psi_index + 1) * g.raw_size() - 1;
          continue;
        }
      }
      if (!g.decode(index % g.raw_size(), phi)) {
        continue;
      }
      if (engine_for != psi_index) {
        if (options.search_psi) {
          psi_coeffs = CoefficientGrid::to_coeffs(psi_entries);
        }
        engine.emplace(truth, psi_coeffs, tests.size(), grid.max_coeff);
        engine_for = psi_index;
      }
      ++chunk.candidates;
      Detail detail;
      const Status status = engine->run(phi, &detail);
      if (status == Status::kNonOverlapping) {
        continue;
      }
      ++chunk.overlapping;
      if (status == Status::kParadoxical) {
        chunk.hits.push_back(make_hit(phi, psi_coeffs, tests, std::move(detail), family->size()));
      }
    }
  });

  SearchResult result;
  for (Chunk& chunk : chunks) {
    result.candidates += chunk.candidates;
    result.overlapping += chunk.overlapping;
    std::move(chunk.hits.begin(), chunk.hits.end(), std::back_inserter(result.hits));
  }
  return result;
}

std::vector<ParadoxHit> find_paradoxes(const FamilyPtr& family, std::span<const Predicate> tests,
                                       const GridSpec& grid, const std::optional<StateVector>& psi,
                                       const SearchOptions& options) {
  return search_paradoxes(family, tests, grid, psi, options).hits;
}

// Experiments

MinFamilyReport min_family_experiment(int n, const GridSpec& grid, std::uint64_t budget,
                                      unsigned threads) {
  if (n < 1 || n > 3) {
    throw DomainError("min-family experiment needs 1 <= n <= 3, got " + std::to_string(n));
  }
  MinFamilyReport report;
  report.n_particles = n;
  report.grid = grid;
  const std::uint64_t tests = static_cast<std::uint64_t>(n) * n;
  const std::uint64_t m = 1ULL << tests;
  report.relations = m;
  const std::uint64_t pairs = choose(m, 2);
  report.families_total = m + pairs;

  const CoefficientGrid grid1(1, grid);
  const CoefficientGrid grid2(2, grid);
  const std::uint64_t cost =
      saturating_add(saturating_mul(saturating_mul(m, grid1.raw_size()), tests),
                     saturating_mul(saturating_mul(pairs, grid2.raw_size()), tests));
  if (cost > budget) {
    report.sampled = true;
    report.stride = cost / budget + (cost % budget != 0 ? 1 : 0);
  }

  // Selected families as (a, b) bitmasks; b == m marks a singleton.
  std::vector<std::pair<std::uint64_t, std::uint64_t>> selected;
  std::uint64_t index = 0;
  for (std::uint64_t a = 0; a < m; ++a, ++index) {
    if (index % report.stride == 0) {
      selected.emplace_back(a, m);
    }
  }
  for (std::uint64_t a = 0; a < m; ++a) {
    for (std::uint64_t b = a + 1; b < m; ++b, ++index) {
      if (index % report.stride == 0) {
        selected.emplace_back(a, b);
      }
    }
  }
  report.families_checked = selected.size();

  struct Chunk {
    std::uint64_t overlapping = 0;
    std::vector<std::string> paradox_families;
  };
  const unsigned t = resolve_threads(threads, selected.size());
  std::vector<Chunk> chunks(t);
  run_chunks(selected.size(), t, [&](std::uint64_t begin, std::uint64_t end, unsigned id) {
    Chunk& chunk = chunks[id];
    std::vector<GridEntry> phi;
    for (std::uint64_t k = begin; k < end; ++k) {
      const auto [a, b] = selected[k];
      std::vector<std::uint64_t> members{a};
      if (b != m) {
        members.push_back(b);
      }
      std::vector<std::vector<char>> truth;
      for (std::uint64_t mask : members) {
        std::vector<char> row(tests);
        for (std::uint64_t bit = 0; bit < tests; ++bit) {
          row[bit] = (mask >> bit & 1ULL) ? 1 : 0;
        }
        truth.push_back(std::move(row));
      }
      const std::vector<ComplexRational> psi(members.size(), ComplexRational(1));
      const Engine engine(truth, psi, tests, grid.max_coeff);
      const CoefficientGrid& g = members.size() == 1 ? grid1 : grid2;
      bool paradox = false;
      for (std::uint64_t i = 0; i < g.raw_size(); ++i) {
        if (!g.decode(i, phi)) {
          continue;
        }
        const Status status = engine.run(phi, nullptr);
        if (status != Status::kNonOverlapping) {
          ++chunk.overlapping;
        }
        paradox = paradox || status == Status::kParadoxical;
      }
      if (paradox) {
        std::string name;
        for (std::uint64_t mask : members) {
          name += (name.empty() ? "" : " + ") + relation_name(relation_from_mask(n, mask));
        }
        chunk.paradox_families.push_back(std::move(name));
      }
    }
  });
  for (Chunk& chunk : chunks) {
    report.overlapping_phis += chunk.overlapping;
    for (std::string& name : chunk.paradox_families) {
      report.paradox_families.push_back(std::move(name));
    }
  }
  report.paradoxes = report.paradox_families.size();
  return report;
}

std::vector<Configuration> three_particle_pool() {
  std::vector<Configuration> pool;
  const auto add = [&](const Family& family, const std::string& prefix) {
    for (const Configuration& c : family.configurations()) {
      const bool duplicate = std::any_of(pool.begin(), pool.end(), [&](const Configuration& p) {
        return p.payload == c.payload;
      });
      if (!duplicate) {
        pool.push_back({prefix + c.name, c.payload});
      }
    }
  };
  add(make_star_graphs(3), "star:");
  add(make_togetherness3(), "tog:");
  add(make_total_orders(3), "ord:");
  return pool;
}

std::vector<MinimalHit> three_relation_minimal_search(const GridSpec& grid,
                                                      const SearchOptions& options) {
  const std::vector<Configuration> pool = three_particle_pool();
  std::vector<Predicate> tests;
  for (int i = 1; i <= 3; ++i) {
    for (int j = 1; j <= 3; ++j) {
      if (i != j) {
        tests.push_back(Predicate::pair(i, j));
      }
    }
  }
  std::vector<MinimalHit> out;
  for (std::size_t a = 0; a < pool.size(); ++a) {
    for (std::size_t b = a + 1; b < pool.size(); ++b) {
      for (std::size_t c = b + 1; c < pool.size(); ++c) {
        FamilyPtr family = share(Family("pool", 3, {pool[a], pool[b], pool[c]}, tests, false));
        for (ParadoxHit& hit : find_paradoxes(family, tests, grid, std::nullopt, options)) {
          out.push_back({{pool[a].name, pool[b].name, pool[c].name}, family, std::move(hit)});
        }
      }
    }
  }
  return out;
}

}  // namespace qpk
