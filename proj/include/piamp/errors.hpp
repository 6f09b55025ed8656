// Copyright 2026 The piamp Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <stdexcept>
#include <string>

namespace piamp {

// All library failures derive from Error so callers (the CLI in particular)
// can map them onto exit codes by category.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Input outside the mathematical domain of an operation (|g11| < 1, kappa <= 0, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

class DimensionError : public Error {
 public:
  using Error::Error;
};

// A documented precondition on matrix structure does not hold.
class ContractError : public Error {
 public:
  using Error::Error;
};

class SingularityError : public Error {
 public:
  using Error::Error;
};

class NoUniqueSolutionError : public Error {
 public:
  using Error::Error;
};

class NotSymplecticError : public Error {
 public:
  using Error::Error;
};

class DecompositionError : public Error {
 public:
  using Error::Error;
};

class SynthesisError : public Error {
 public:
  SynthesisError(const std::string& stage, const std::string& what)
      : Error("synthesis failed at stage '" + stage + "': " + what), stage_(stage) {}

  const std::string& stage() const noexcept { return stage_; }

 private:
  std::string stage_;
};

// Malformed serialized input; the message names the offending field.
class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace piamp
