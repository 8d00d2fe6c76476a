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

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "qpk/errors.hpp"
#include "qpk/family.hpp"
#include "qpk/inference.hpp"
#include "qpk/paradox.hpp"
#include "qpk/registry.hpp"
#include "qpk/scenario.hpp"
#include "qpk/search.hpp"

namespace py = pybind11;

namespace {

using nlohmann::json;

py::object to_python(const json& j) {
  return py::module_::import("json").attr("loads")(j.dump());
}

py::dict outcome_dict(const qpk::TestOutcome& o) {
  py::dict d;
  d["test"] = o.predicate.display();
  d["x"] = qpk::format_scalar(o.x);
  d["complement"] = qpk::format_scalar(o.complement);
  d["s"] = qpk::format_scalar(o.s);
  d["verdict"] = std::string(qpk::to_string(o.verdict));
  return d;
}

py::dict knowledge_dict(const qpk::Knowledge& k) {
  auto names = [](const std::vector<qpk::Predicate>& ps) {
    std::vector<std::string> out;
    for (const qpk::Predicate& p : ps) out.push_back(p.display());
    return out;
  };
  py::list outcomes;
  for (const qpk::TestOutcome& o : k.outcomes) outcomes.append(outcome_dict(o));
  py::dict d;
  d["affirmed"] = names(k.affirmed);
  d["denied"] = names(k.denied);
  d["uncertain"] = names(k.uncertain);
  d["outcomes"] = outcomes;
  return d;
}

std::vector<qpk::Predicate> resolve_tests(const qpk::Family& family,
                                          const std::optional<std::vector<std::string>>& names) {
  if (!names) {
    return {family.test_universe().begin(), family.test_universe().end()};
  }
  std::vector<qpk::Predicate> tests;
  for (const std::string& n : *names) {
    const qpk::Predicate* p = family.find_test(n);
    if (!p) throw qpk::SchemaError("unknown test \"" + n + "\"");
    tests.push_back(*p);
  }
  return tests;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact pre/post-selection analysis of quantum paradoxical knowledge";

  auto base = py::register_exception<qpk::Error>(m, "QpkError");
  py::register_exception<qpk::ParseError>(m, "ParseError", base.ptr());
  py::register_exception<qpk::NonOverlappingError>(m, "NonOverlappingError", base.ptr());
  py::register_exception<qpk::SchemaError>(m, "SchemaError", base.ptr());
  py::register_exception<qpk::SizeError>(m, "SizeError", base.ptr());

  py::class_<qpk::ComplexRational>(m, "ComplexRational")
      .def(py::init([](const std::string& text) { return qpk::parse_scalar(text); }))
      .def(py::init([](long value) { return qpk::ComplexRational(value); }))
      .def_property_readonly("re", [](const qpk::ComplexRational& z) { return z.re().to_string(); })
      .def_property_readonly("im", [](const qpk::ComplexRational& z) { return z.im().to_string(); })
      .def("is_zero", &qpk::ComplexRational::is_zero)
      .def("conjugate", [](const qpk::ComplexRational& z) { return qpk::conjugate(z); })
      .def("__add__", [](const qpk::ComplexRational& a, const qpk::ComplexRational& b) { return a + b; })
      .def("__mul__", [](const qpk::ComplexRational& a, const qpk::ComplexRational& b) { return a * b; })
      .def("__neg__", [](const qpk::ComplexRational& a) { return -a; })
      .def("__eq__", [](const qpk::ComplexRational& a, const qpk::ComplexRational& b) { return a == b; })
      .def("__str__", &qpk::format_scalar)
      .def("__repr__", [](const qpk::ComplexRational& z) {
        return "ComplexRational('" + qpk::format_scalar(z) + "')";
      });

  py::class_<qpk::Family, std::shared_ptr<qpk::Family>>(m, "Family")
      .def_property_readonly("kind", &qpk::Family::kind)
      .def_property_readonly("n_particles", &qpk::Family::n_particles)
      .def("__len__", &qpk::Family::size)
      .def_property_readonly("names", [](const qpk::Family& f) {
        std::vector<std::string> out;
        for (const qpk::Configuration& c : f.configurations()) out.push_back(c.name);
        return out;
      })
      .def_property_readonly("tests", [](const qpk::Family& f) {
        std::vector<std::string> out;
        for (const qpk::Predicate& p : f.test_universe()) out.push_back(p.display());
        return out;
      })
      .def("satisfies", [](const qpk::Family& f, const std::string& config, const std::string& test) {
        const auto index = f.index_of(config);
        if (!index) throw qpk::SchemaError("unknown configuration \"" + config + "\"");
        const qpk::Predicate* p = f.find_test(test);
        if (!p) throw qpk::SchemaError("unknown test \"" + test + "\"");
        return p->eval(f[*index]);
      });

  auto wrap = [](qpk::Family f) { return std::make_shared<qpk::Family>(std::move(f)); };
  m.def("togetherness3", [wrap] { return wrap(qpk::make_togetherness3()); });
  m.def("total_orders", [wrap](int n) { return wrap(qpk::make_total_orders(n)); });
  m.def("one_to_one_functions", [wrap](int n) { return wrap(qpk::make_one_to_one_functions(n)); });
  m.def("star_graphs", [wrap](int n) { return wrap(qpk::make_star_graphs(n)); });
  m.def("lr_strings", [wrap](int n) { return wrap(qpk::make_lr_strings(n)); });
  m.def("ternary_energy", [wrap] { return wrap(qpk::make_ternary_energy()); });
  m.def("all_relations", [wrap](int n) { return wrap(qpk::make_all_relations(n)); });

  py::class_<qpk::StateVector>(m, "StateVector")
      .def(py::init([](std::shared_ptr<qpk::Family> f, const std::vector<std::string>& coeffs) {
             std::vector<qpk::ComplexRational> values;
             for (const std::string& c : coeffs) values.push_back(qpk::parse_scalar(c));
             return qpk::StateVector(f, std::move(values));
           }),
           py::arg("family"), py::arg("coeffs"))
      .def_property_readonly("coeffs", [](const qpk::StateVector& v) {
        std::vector<std::string> out;
        for (const qpk::ComplexRational& c : v.coeffs()) out.push_back(qpk::format_scalar(c));
        return out;
      });

  m.def("uniform_psi", [](std::shared_ptr<qpk::Family> f) { return qpk::uniform_psi(f); });
  m.def("product_state",
        [](std::shared_ptr<qpk::Family> f, const std::vector<std::pair<std::string, std::string>>& factors) {
          std::vector<std::pair<qpk::ComplexRational, qpk::ComplexRational>> parsed;
          for (const auto& [l, r] : factors) {
            parsed.emplace_back(qpk::parse_scalar(l), qpk::parse_scalar(r));
          }
          return qpk::product_state(f, parsed);
        });
  m.def("inner", &qpk::inner, py::arg("phi"), py::arg("psi"));
  m.def(
      "classify",
      [](const qpk::StateVector& phi, const qpk::StateVector& psi, const std::string& test) {
        const qpk::Predicate* p = phi.family()->find_test(test);
        if (!p) throw qpk::SchemaError("unknown test \"" + test + "\"");
        return outcome_dict(qpk::classify(phi, psi, *p));
      },
      py::arg("phi"), py::arg("psi"), py::arg("test"));
  m.def(
      "extract_knowledge",
      [](const qpk::StateVector& phi, const qpk::StateVector& psi,
         const std::optional<std::vector<std::string>>& tests) {
        return knowledge_dict(
            qpk::extract_knowledge(phi, psi, resolve_tests(*phi.family(), tests)));
      },
      py::arg("phi"), py::arg("psi"), py::arg("tests") = std::nullopt);
  m.def(
      "check_consistency",
      [](const qpk::StateVector& phi, const qpk::StateVector& psi,
         const std::optional<std::vector<std::string>>& tests) {
        const qpk::Knowledge k =
            qpk::extract_knowledge(phi, psi, resolve_tests(*phi.family(), tests));
        const qpk::Verdict v = qpk::check_consistency(*phi.family(), k);
        py::dict d;
        d["paradoxical"] = v.paradoxical();
        d["witness"] = v.witness;
        d["checked"] = v.checked_count;
        return d;
      },
      py::arg("phi"), py::arg("psi"), py::arg("tests") = std::nullopt);

  m.def("analyze_scenario", [](const std::string& text) {
    return to_python(qpk::report_to_json(qpk::analyze(qpk::parse_scenario_text(text))));
  });
  m.def("chroma_scenario", [](const std::string& text) {
    return to_python(qpk::chroma_to_json(qpk::chroma(qpk::parse_scenario_text(text))));
  });
  m.def("builtin_names", [] {
    std::vector<std::string> out;
    for (const qpk::BuiltinExample& e : qpk::builtin_examples()) out.push_back(e.name);
    return out;
  });
  m.def("verify", [](const std::string& name) {
    const qpk::BuiltinExample* e = qpk::find_builtin(name);
    if (!e) throw qpk::SchemaError("unknown example \"" + name + "\"");
    const qpk::VerifyResult r = qpk::verify_builtin(*e);
    return py::make_tuple(r.passed, r.mismatches);
  });

  m.def(
      "find_paradoxes",
      [](std::shared_ptr<qpk::Family> f, int c, bool imaginary, bool skip_scalar_multiples,
         const std::optional<std::vector<std::string>>& tests, unsigned threads,
         std::uint64_t budget) {
        const std::vector<qpk::Predicate> resolved = resolve_tests(*f, tests);
        std::vector<qpk::ParadoxHit> hits;
        {
          py::gil_scoped_release release;
          hits = qpk::find_paradoxes(f, resolved, {c, imaginary, skip_scalar_multiples},
                                     std::nullopt, {budget, threads, false});
        }
        json out = json::array();
        for (const qpk::ParadoxHit& h : hits) out.push_back(qpk::hit_to_json(h));
        return to_python(out);
      },
      py::arg("family"), py::arg("c") = 1, py::arg("imaginary") = false,
      py::arg("skip_scalar_multiples") = true, py::arg("tests") = std::nullopt,
      py::arg("threads") = 0u, py::arg("budget") = qpk::kDefaultBudget);
  m.def(
      "min_family_experiment",
      [](int n, int c, std::uint64_t budget) {
        qpk::MinFamilyReport r;
        {
          py::gil_scoped_release release;
          r = qpk::min_family_experiment(n, {c, false, true}, budget);
        }
        return to_python(qpk::min_family_to_json(r));
      },
      py::arg("n"), py::arg("c") = 2, py::arg("budget") = qpk::kDefaultBudget);
}
