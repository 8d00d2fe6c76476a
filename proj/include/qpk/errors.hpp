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
#include <cstdint>
#include <stdexcept>
#include <string>

namespace qpk {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed scalar text. `position()` is the 0-based offset of the offending character.
class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::size_t position)
      : Error(message), position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

/// A generator or operation was called with parameters outside its domain.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// A predicate was evaluated on a configuration whose payload it cannot inspect,
/// or refers to particles outside the family.
class ApplicabilityError : public Error {
 public:
  using Error::Error;
};

/// Two state vectors over different families were combined.
class FamilyMismatchError : public Error {
 public:
  using Error::Error;
};

/// <Phi|Psi> = 0: the post-selection can never succeed, so no knowledge is defined.
class NonOverlappingError : public Error {
 public:
  using Error::Error;
};

/// An exact enumeration would be too large to run.
class SizeError : public Error {
 public:
  using Error::Error;
};

/// An enumeration exceeded its configured work budget. `count()` is the work it would need
/// (saturated at UINT64_MAX).
class BudgetError : public SizeError {
 public:
  BudgetError(const std::string& message, std::uint64_t count)
      : SizeError(message), count_(count) {}
  std::uint64_t count() const { return count_; }

 private:
  std::uint64_t count_;
};

/// A scenario document violates the file schema. The message names the field path.
class SchemaError : public Error {
 public:
  using Error::Error;
};

}  // namespace qpk
