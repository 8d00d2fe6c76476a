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

// Acceptance gate: one PASS/FAIL line per criterion, nonzero exit if any fails.

#include <chrono>
#include <functional>
#include <iostream>
#include <sstream>

#include "oracle.hpp"
#include "qpk/errors.hpp"
#include "qpk/paradox.hpp"
#include "qpk/search.hpp"

namespace {

using qpk::ComplexRational;
using qpk::StateVector;
using qpk::TestVerdict;

class Check {
 public:
  void expect(bool ok, const std::string& what) {
    if (!ok && failure_.empty()) failure_ = what;
  }
  const std::string& failure() const { return failure_; }

 private:
  std::string failure_;
};

StateVector ints(const qpk::FamilyPtr& f, std::vector<long> values) {
  return StateVector(f, std::vector<ComplexRational>(values.begin(), values.end()));
}

std::vector<ComplexRational> coeffs(std::vector<long> values) {
  return {values.begin(), values.end()};
}

std::set<std::string> names(const std::vector<qpk::Predicate>& ps) {
  std::set<std::string> out;
  for (const qpk::Predicate& p : ps) out.insert(p.display());
  return out;
}

std::vector<qpk::Predicate> tests_of(const qpk::Family& f, std::vector<std::pair<int, int>> pairs) {
  std::vector<qpk::Predicate> out;
  for (auto [i, j] : pairs) out.push_back(f.pair_test(i, j));
  return out;
}

void pigeonhole(Check& c) {
  const auto f = qpk::share(qpk::make_lr_strings(3));
  const std::vector plus(3, std::pair<ComplexRational, ComplexRational>{1, 1});
  const std::vector plus_i(3, std::pair<ComplexRational, ComplexRational>{1, ComplexRational::i()});
  const StateVector psi = qpk::product_state(f, plus);
  const StateVector phi = qpk::product_state(f, plus_i);
  const auto tests = tests_of(*f, {{1, 2}, {2, 3}, {1, 3}});
  const qpk::Knowledge k = qpk::extract_knowledge(phi, psi, tests);
  for (const qpk::TestOutcome& o : k.outcomes) {
    c.expect(o.x.is_zero(), o.predicate.display() + " x != 0");
  }
  c.expect(qpk::inner(phi, psi) == qpk::parse_scalar("-2-2i"), "s != -2-2i");
  c.expect(k.denied.size() == 3, "not all denied");
  c.expect(qpk::check_consistency(*f, k).paradoxical(), "not paradoxical");
}

void relational_pigeonhole(Check& c) {
  const auto f = qpk::share(qpk::make_togetherness3());
  const qpk::Knowledge k =
      qpk::extract_knowledge(ints(f, {-1, 1, 1, 1}), qpk::uniform_psi(f), f->test_universe());
  c.expect(names(k.denied) == std::set<std::string>{"P_12", "P_23", "P_13"}, "D wrong");
  c.expect(k.affirmed.empty(), "A not empty");
  c.expect(qpk::check_consistency(*f, k).paradoxical(), "not paradoxical");
}

void penrose(Check& c) {
  const auto f = qpk::share(qpk::make_total_orders(3));
  const StateVector phi = ints(f, {2, 2, 2, -1, -1, -1});
  const StateVector psi = qpk::uniform_psi(f);
  c.expect(qpk::inner(phi, psi) == ComplexRational(3), "s != 3");
  for (const auto& p : tests_of(*f, {{1, 2}, {2, 3}, {3, 1}})) {
    const qpk::TestOutcome o = qpk::classify(phi, psi, p);
    c.expect(o.verdict == TestVerdict::kAffirmed && o.x == ComplexRational(3),
             p.display() + " not affirmed with x = 3");
  }
  for (const auto& p : tests_of(*f, {{2, 1}, {3, 2}, {1, 3}})) {
    c.expect(qpk::classify(phi, psi, p).verdict == TestVerdict::kDenied, p.display() + " not denied");
  }
  const qpk::Knowledge k = qpk::extract_knowledge(phi, psi, f->test_universe());
  const qpk::Verdict v = qpk::check_consistency(*f, k);
  c.expect(v.paradoxical() && v.checked_count == 6, "not paradoxical over 6 orders");
  for (std::size_t r = 0; r < f->size(); ++r) {
    std::string image;
    for (char ch : (*f)[r].name) image += static_cast<char>('1' + (ch - '1' + 1) % 3);
    c.expect(phi[*f->index_of(image)] == phi[r], "coefficients not cyclic-invariant");
  }
}

void functions(Check& c) {
  const auto f = qpk::share(qpk::make_one_to_one_functions(3));
  const StateVector phi = ints(f, {-1, 1, 1, -1, 1, 1});
  const StateVector psi = qpk::uniform_psi(f);
  c.expect(qpk::inner(phi, psi) == ComplexRational(2), "s != 2");
  const std::vector<qpk::Predicate> tests{*f->find_test("r(1)=2"), *f->find_test("r(1)=3")};
  const qpk::Knowledge k = qpk::extract_knowledge(phi, psi, tests);
  for (const qpk::TestOutcome& o : k.outcomes) {
    c.expect(o.verdict == TestVerdict::kAffirmed && o.x == ComplexRational(2),
             o.predicate.display() + " not affirmed with x = 2");
  }
  c.expect(qpk::check_consistency(*f, k).paradoxical(), "not paradoxical");
}

void star4(Check& c) {
  const auto f = qpk::share(qpk::make_star_graphs(4));
  std::vector<StateVector> basis;
  for (std::size_t k = 0; k < 4; ++k) {
    std::vector<long> v(4, 1);
    v[k] = -1;
    basis.push_back(ints(f, v));
  }
  const qpk::BasisReport r = qpk::check_unconditional(*f, qpk::uniform_psi(f), basis, f->test_universe());
  c.expect(r.orthogonal, "basis not orthogonal");
  c.expect(r.all_paradoxical, "not all paradoxical");
  for (std::size_t k = 0; k < r.per_outcome.size(); ++k) {
    const qpk::BasisOutcome& o = r.per_outcome[k];
    c.expect(o.s == ComplexRational(2), o.label + " s != 2");
    if (!o.knowledge) continue;
    const int isolated = static_cast<int>(k + 1);
    std::set<std::string> triangle, cut;
    for (int i = 1; i <= 4; ++i) {
      for (int j = i + 1; j <= 4; ++j) {
        const std::string name = "P_" + std::to_string(i) + std::to_string(j);
        (i == isolated || j == isolated ? cut : triangle).insert(name);
      }
    }
    c.expect(names(o.knowledge->affirmed) == triangle, o.label + " triangle not affirmed");
    c.expect(names(o.knowledge->denied) == cut, o.label + " isolated particle not denied");
    c.expect(o.verdict && o.verdict->paradoxical(), o.label + " not paradoxical");
  }
}

void starN(Check& c) {
  const qpk::StarScenario s = qpk::starN_scenario(6);
  c.expect(qpk::inner(s.phi, s.psi) == ComplexRational(2), "s != 2");
  const qpk::Knowledge k = qpk::extract_knowledge(s.phi, s.psi, s.family->test_universe());
  for (const qpk::TestOutcome& o : k.outcomes) {
    const auto [i, j] = o.predicate.particles();
    if (j <= 5) {
      c.expect(o.verdict == TestVerdict::kAffirmed && o.x == ComplexRational(2),
               o.predicate.display() + " not affirmed with x = 2");
    } else {
      c.expect(o.verdict == TestVerdict::kUncertain, o.predicate.display() + " not uncertain");
    }
  }
  const qpk::ChromaticReport r = qpk::analyze_coloring(k, 6);
  c.expect(r.chromatic_number == 5 && r.violates_four_color_bound(), "chromatic number != 5");
  for (int n = 4; n <= 7; ++n) {
    const qpk::StarScenario sn = qpk::starN_scenario(n);
    for (int i = 1; i < n; ++i) {
      const qpk::TestOutcome o = qpk::classify(sn.phi, sn.psi, sn.family->pair_test(i, n));
      c.expect(o.x == ComplexRational(4 - n), "x != 4 - N");
      c.expect(o.verdict == (n == 4 ? TestVerdict::kDenied : TestVerdict::kUncertain),
               "wrong verdict for (i, N) at N = " + std::to_string(n));
    }
  }
}

void ternary(Check& c) {
  const auto f = qpk::share(qpk::make_ternary_energy());
  const StateVector psi = qpk::uniform_psi(f);
  const StateVector phi = ints(f, {0, 2, 2, 2, -1, -1});
  const StateVector literal = ints(f, {0, 2, 2, 2, -2, 0});
  c.expect(qpk::inner(phi, psi) == ComplexRational(4), "s != 4");
  for (const qpk::Predicate& p : f->test_universe()) {
    const qpk::TestOutcome o = qpk::classify(phi, psi, p);
    const qpk::TestOutcome l = qpk::classify(literal, psi, p);
    c.expect(o.x == l.x && o.s == l.s, p.display() + " readings differ");
    if (p.display() == "E_c=2") {
      c.expect(o.verdict == TestVerdict::kDenied && o.x.is_zero(), "E_c=2 not denied");
    } else {
      c.expect(o.verdict == TestVerdict::kAffirmed && o.x == ComplexRational(4),
               p.display() + " not affirmed with x = 4");
    }
  }
  c.expect(qpk::check_consistency(*f, qpk::extract_knowledge(phi, psi, f->test_universe()))
               .paradoxical(),
           "not paradoxical");
}

void star3(Check& c) {
  const auto f = qpk::share(qpk::make_star_graphs(3));
  const qpk::Knowledge k =
      qpk::extract_knowledge(ints(f, {-1, 1, 1}), qpk::uniform_psi(f), f->test_universe());
  c.expect(names(k.denied) == std::set<std::string>{"P_12", "P_13"}, "D wrong");
  c.expect(qpk::check_consistency(*f, k).paradoxical(), "not paradoxical");
}

void minimality(Check& c) {
  const auto start = std::chrono::steady_clock::now();
  const qpk::MinFamilyReport r = qpk::min_family_experiment(2, {2, false, true});
  const double seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  c.expect(!r.sampled && r.families_checked == 136 && r.families_total == 136,
           "not exhaustive over 136 families");
  c.expect(r.paradoxes == 0, std::to_string(r.paradoxes) + " paradoxes found");
  c.expect(seconds < 60, "over the 60 s budget");
}

void full_family(Check& c) {
  const qpk::Family f = qpk::make_all_relations(2);
  const auto universe = f.test_universe();
  c.expect(universe.size() == 4, "universe is not the 4 ordered pairs");
  for (int code = 0; code < 81; ++code) {
    qpk::Knowledge k;
    int rest = code;
    for (const qpk::Predicate& p : universe) {
      if (rest % 3 == 1) k.affirmed.push_back(p);
      if (rest % 3 == 2) k.denied.push_back(p);
      rest /= 3;
    }
    c.expect(!qpk::check_consistency(f, k).paradoxical(), "paradox for code " + std::to_string(code));
  }
}

void properties(Check& c) {
  oracle::Gen gen(oracle::kSeed);
  const std::vector<qpk::FamilyPtr> families{
      qpk::share(qpk::make_togetherness3()), qpk::share(qpk::make_total_orders(3)),
      qpk::share(qpk::make_star_graphs(4)), qpk::share(qpk::make_lr_strings(3)),
      qpk::share(qpk::make_ternary_energy())};
  for (int trial = 0; trial < 200; ++trial) {
    const qpk::FamilyPtr f = families[gen.integer(0, families.size() - 1)];
    std::vector<ComplexRational> a, b;
    for (std::size_t r = 0; r < f->size(); ++r) {
      a.push_back(gen.complex(3));
      b.push_back(gen.complex(3));
    }
    const StateVector phi(f, a), psi(f, b);
    ComplexRational k = gen.complex(4);
    if (k.is_zero()) k = ComplexRational(2);
    for (const qpk::Predicate& p : f->test_universe()) {
      const StateVector proj = qpk::project(psi, p);
      c.expect(qpk::inner(phi, proj) + qpk::inner(phi, psi - proj) == qpk::inner(phi, psi),
               "complement identity");
      c.expect(qpk::project(proj, p) == proj, "idempotence");
      c.expect(qpk::project(phi + psi.scaled(k), p) == qpk::project(phi, p) + proj.scaled(k),
               "linearity");
      if (!qpk::inner(phi, psi).is_zero()) {
        c.expect(qpk::classify(phi.scaled(k), psi, p).verdict == qpk::classify(phi, psi, p).verdict,
                 "scale invariance");
      }
    }
    if (qpk::inner(phi, psi).is_zero()) continue;
    const qpk::Knowledge kn = qpk::extract_knowledge(phi, psi, f->test_universe());
    for (const qpk::Predicate& x : kn.affirmed) {
      for (const qpk::Predicate& y : kn.denied) c.expect(!(x == y), "A and D intersect");
    }
    const qpk::Verdict v = qpk::check_consistency(*f, kn);
    if (!v.paradoxical()) {
      const qpk::Configuration& w = (*f)[*f->index_of(*v.witness)];
      for (const qpk::Predicate& p : kn.affirmed) c.expect(p.eval(w), "witness misses affirmed");
      for (const qpk::Predicate& p : kn.denied) c.expect(!p.eval(w), "witness meets denied");
    }
  }
  const auto f = qpk::share(qpk::make_total_orders(3));
  const auto tests = f->test_universe();
  const auto serial = qpk::find_paradoxes(f, tests, {2, false, false}, std::nullopt,
                                          {qpk::kDefaultBudget, 1, false});
  for (unsigned threads : {2u, 5u, 0u}) {
    const auto parallel = qpk::find_paradoxes(f, tests, {2, false, false}, std::nullopt,
                                              {qpk::kDefaultBudget, threads, false});
    bool same = parallel.size() == serial.size();
    for (std::size_t i = 0; same && i < serial.size(); ++i) same = parallel[i].phi == serial[i].phi;
    c.expect(same, "parallel search differs from serial");
  }
}

bool has_phi(const std::vector<qpk::ParadoxHit>& hits, const std::vector<ComplexRational>& phi) {
  return std::any_of(hits.begin(), hits.end(), [&](const auto& h) { return h.phi == phi; });
}

void recovery(Check& c) {
  const auto tog = qpk::share(qpk::make_togetherness3());
  c.expect(has_phi(qpk::find_paradoxes(tog, tog->test_universe(), {1, false, false}),
                   coeffs({-1, 1, 1, 1})),
           "relational pigeonhole vector missing");
  const auto orders = qpk::share(qpk::make_total_orders(3));
  c.expect(has_phi(qpk::find_paradoxes(orders, orders->test_universe(), {2, false, false}),
                   coeffs({2, 2, 2, -1, -1, -1})),
           "Penrose vector missing");
  const auto star = qpk::share(qpk::make_star_graphs(3));
  c.expect(has_phi(qpk::find_paradoxes(star, star->test_universe(), {1, false, false}),
                   coeffs({-1, 1, 1})),
           "star3 vector missing");
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<void(Check&)>>> criteria{
      {"pigeonhole with qubit boxes", pigeonhole},
      {"relational pigeonhole", relational_pigeonhole},
      {"Penrose stairs", penrose},
      {"one-to-one functions", functions},
      {"unconditional star4", star4},
      {"starN clique and coloring", starN},
      {"ternary energy", ternary},
      {"star3 isolation", star3},
      {"two-relation minimality", minimality},
      {"full relation family", full_family},
      {"property suites", properties},
      {"search recovery", recovery},
  };
  int failures = 0;
  for (std::size_t k = 0; k < criteria.size(); ++k) {
    Check check;
    try {
      criteria[k].second(check);
    } catch (const std::exception& e) {
      check.expect(false, std::string("exception: ") + e.what());
    }
    const bool ok = check.failure().empty();
    failures += ok ? 0 : 1;
    std::cout << (ok ? "PASS" : "FAIL") << " criterion " << (k + 1) << ": " << criteria[k].first;
    if (!ok) std::cout << " (" << check.failure() << ")";
    std::cout << "\n";
  }
  std::cout << (criteria.size() - failures) << " of " << criteria.size() << " criteria pass\n";
  return failures == 0 ? 0 : 1;
}
