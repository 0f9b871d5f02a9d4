// Copyright 2026 The Authors.
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

namespace viewplan {

// Base for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Non-positive dimensions, coincident points and similar degenerate inputs.
class InvalidGeometryError : public Error {
 public:
  using Error::Error;
};

// Time step, face or robot index outside its valid range.
class IndexError : public Error {
 public:
  using Error::Error;
};

// A motion that would leave the grid.
class InvalidTransitionError : public Error {
 public:
  using Error::Error;
};

// A numeric argument outside the function's domain.
class DomainError : public Error {
 public:
  using Error::Error;
};

// A candidate solution holds more than one trajectory for some robot.
class MatroidViolationError : public Error {
 public:
  using Error::Error;
};

// Caller broke a documented precondition.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

// Scenario file errors. Each failure stage has its own type so callers can
// report a precise diagnostic.
class ScenarioError : public Error {
 public:
  using Error::Error;
};

class ScenarioParseError : public ScenarioError {
 public:
  using ScenarioError::ScenarioError;
};

class SchemaVersionError : public ScenarioError {
 public:
  using ScenarioError::ScenarioError;
};

class ScenarioValidationError : public ScenarioError {
 public:
  using ScenarioError::ScenarioError;
};

}  // namespace viewplan
