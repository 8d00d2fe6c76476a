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

#include "qpk/inference.hpp"

#include <stdexcept>

#include "qpk/errors.hpp"

namespace qpk {

namespace {

void require_same_family(const StateVector& a, const StateVector& b) {
  if (a.family() != b.family() && !(*a.family() == *b.family())) {
    throw FamilyMismatchError("state vectors belong to different families");
  }
}

}  // namespace

StateVector::StateVector(FamilyPtr family, std::vector<ComplexRational> coeffs)
    : family_(std::move(family)), coeffs_(std::move(coeffs)) {
  if (!family_) {
    throw DomainError("state vector without a family");
  }
  if (coeffs_.size() != family_->size()) {
    throw DomainError("state vector has " + std::to_string(coeffs_.size()) +
                      " coefficients for a family of " + std::to_string(family_->size()));
  }
}

StateVector StateVector::operator-(const StateVector& other) const {
  require_same_family(*this, other);
  std::vector<ComplexRational> out(coeffs_);
  for (std::size_t k = 0; k < out.size(); ++k) {
    out[k] -= other.coeffs_[k];
  }
  return {family_, std::move(out)};
}

StateVector StateVector::operator+(const StateVector& other) const {
  require_same_family(*this, other);
  std::vector<ComplexRational> out(coeffs_);
  for (std::size_t k = 0; k < out.size(); ++k) {
    out[k] += other.coeffs_[k];
  }
  return {family_, std::move(out)};
}

StateVector StateVector::scaled(const ComplexRational& k) const {
  std::vector<ComplexRational> out(coeffs_);
  for (ComplexRational& c : out) {
    c *= k;
  }
  return {family_, std::move(out)};
}

StateVector state_from_map(const FamilyPtr& family,
                           std::span<const std::pair<std::string, ComplexRational>> coeffs) {
  std::vector<ComplexRational> out(family->size());
  for (const auto& [name, value] : coeffs) {
    const auto index = family->index_of(name);
    if (!index) {
      throw DomainError("no configuration named \"" + name + "\"");
    }
    out[*index] = value;
  }
  return {family, std::move(out)};
}

std::string_view to_string(TestVerdict v) {
  switch (v) {
    case TestVerdict::kAffirmed:
      return "affirmed";
    case TestVerdict::kDenied:
      return "denied";
    case TestVerdict::kUncertain:
      return "uncertain";
  }
  return "?";
}

StateVector uniform_psi(const FamilyPtr& family) {
  return {family, std::vector<ComplexRational>(family->size(), ComplexRational(1))};
}

StateVector product_state(
    const FamilyPtr& family,
    std::span<const std::pair<ComplexRational, ComplexRational>> per_particle) {
  if (family->kind() != "lr_strings") {
    throw DomainError("product states are defined over lr_strings families only");
  }
  if (per_particle.size() != static_cast<std::size_t>(family->n_particles())) {
    throw DomainError("product state needs " + std::to_string(family->n_particles()) +
                      " particle factors, got " + std::to_string(per_particle.size()));
  }
  std::vector<ComplexRational> out;
  out.reserve(family->size());
  for (const Configuration& c : family->configurations()) {
    ComplexRational amplitude(1);
    for (std::size_t k = 0; k < c.name.size(); ++k) {
      amplitude *= c.name[k] == 'L' ? per_particle[k].first : per_particle[k].second;
    }
    out.push_back(std::move(amplitude));
  }
  return {family, std::move(out)};
}

StateVector project(const StateVector& v, const Predicate& p) {
  const Family& family = *v.family();
  family.check_applicable(p);
  std::vector<ComplexRational> out(v.coeffs().begin(), v.coeffs().end());
  for (std::size_t k = 0; k < out.size(); ++k) {
    if (!p.eval(family[k])) {
      out[k] = ComplexRational();
    }
  }
  return {v.family(), std::move(out)};
}

ComplexRational inner(const StateVector& phi, const StateVector& psi) {
  require_same_family(phi, psi);
  ComplexRational sum;
  for (std::size_t k = 0; k < phi.size(); ++k) {
    if (phi[k].is_zero() || psi[k].is_zero()) {
      continue;
    }
    sum += conjugate(phi[k]) * psi[k];
  }
  return sum;
}

TestOutcome classify(const StateVector& phi, const StateVector& psi, const Predicate& p) {
  ComplexRational s = inner(phi, psi);
  if (s.is_zero()) {
    throw NonOverlappingError("<Phi|Psi> = 0: the post-selected outcome is impossible");
  }
  const StateVector projected = project(psi, p);
  ComplexRational x = inner(phi, projected);
  ComplexRational complement = inner(phi, psi - projected);
  if (x + complement != s) {
    throw std::logic_error("complement identity violated for " + p.display());
  }
  TestVerdict verdict = TestVerdict::kUncertain;
  if (complement.is_zero()) {
    verdict = TestVerdict::kAffirmed;
  } else if (x.is_zero()) {
    verdict = TestVerdict::kDenied;
  }
  return {p, std::move(x), std::move(complement), std::move(s), verdict};
}

Knowledge extract_knowledge(const StateVector& phi, const StateVector& psi,
                            std::span<const Predicate> tests) {
  if (inner(phi, psi).is_zero()) {
    throw NonOverlappingError("<Phi|Psi> = 0: the post-selected outcome is impossible");
  }
  Knowledge k;
  for (const Predicate& p : tests) {
    TestOutcome outcome = classify(phi, psi, p);
    switch (outcome.verdict) {
      case TestVerdict::kAffirmed:
        k.affirmed.push_back(p);
        break;
      case TestVerdict::kDenied:
        k.denied.push_back(p);
        break;
      case TestVerdict::kUncertain:
        k.uncertain.push_back(p);
        break;
    }
    k.outcomes.push_back(std::move(outcome));
  }
  return k;
}

}  // namespace qpk
