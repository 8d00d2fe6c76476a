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

#include <span>
#include <string_view>
#include <utility>
#include <vector>

#include "qpk/family.hpp"
#include "qpk/scalar.hpp"

namespace qpk {

/// Unnormalized state over a family's configurations, coefficients indexed in family order.
///
/// Coefficients are always stored in ket form. When a vector plays the bra role (the
/// post-selected <Phi|), `inner` conjugates it, so a bra is entered as the ket |Phi>.
class StateVector {
 public:
  /// Throws DomainError when the coefficient count differs from the family size.
  StateVector(FamilyPtr family, std::vector<ComplexRational> coeffs);

  const FamilyPtr& family() const { return family_; }
  std::span<const ComplexRational> coeffs() const { return coeffs_; }
  const ComplexRational& operator[](std::size_t index) const { return coeffs_[index]; }
  std::size_t size() const { return coeffs_.size(); }

  StateVector operator-(const StateVector& other) const;
  StateVector operator+(const StateVector& other) const;
  StateVector scaled(const ComplexRational& k) const;

  friend bool operator==(const StateVector& a, const StateVector& b) {
    return a.coeffs_ == b.coeffs_ && (a.family_ == b.family_ || *a.family_ == *b.family_);
  }

 private:
  FamilyPtr family_;
  std::vector<ComplexRational> coeffs_;
};

/// Coefficients by configuration name; names not listed get 0. Throws DomainError on
/// unknown names.
StateVector state_from_map(const FamilyPtr& family,
                           std::span<const std::pair<std::string, ComplexRational>> coeffs);

enum class TestVerdict { kAffirmed, kDenied, kUncertain };

std::string_view to_string(TestVerdict v);

struct TestOutcome {
  Predicate predicate;
  /// <Phi|P|Psi>.
  ComplexRational x;
  /// <Phi|(1-P)|Psi>.
  ComplexRational complement;
  /// <Phi|Psi>.
  ComplexRational s;
  TestVerdict verdict;
};

/// What a pre/post-selection pair lets us say about each tested predicate.
struct Knowledge {
  std::vector<Predicate> affirmed;
  std::vector<Predicate> denied;
  std::vector<Predicate> uncertain;
  std::vector<TestOutcome> outcomes;
};

/// All coefficients 1.
StateVector uniform_psi(const FamilyPtr& family);

/// Product of single-particle states over an lr_strings family. `per_particle[k]` is the
/// (L, R) amplitude pair of particle k+1. Throws DomainError when the family is not an
/// lr_strings family or the lengths differ.
StateVector product_state(const FamilyPtr& family,
                          std::span<const std::pair<ComplexRational, ComplexRational>> per_particle);

/// Zeroes the coefficients of configurations failing `p`.
StateVector project(const StateVector& v, const Predicate& p);

/// sum_r conj(phi_r) psi_r. Throws FamilyMismatchError for different families.
ComplexRational inner(const StateVector& phi, const StateVector& psi);

/// Throws NonOverlappingError when <Phi|Psi> = 0.
TestOutcome classify(const StateVector& phi, const StateVector& psi, const Predicate& p);

/// Classifies every test and partitions them into affirmed, denied and uncertain, keeping
/// the order of `tests` within each set.
Knowledge extract_knowledge(const StateVector& phi, const StateVector& psi,
                            std::span<const Predicate> tests);

}  // namespace qpk
