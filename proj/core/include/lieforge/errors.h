// Copyright 2026 The LieForge Authors.
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

#include <cstddef>
#include <stdexcept>
#include <string>

namespace lieforge {

/// Base of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : Error(what + " at position " + std::to_string(position)), position_(position) {}
  [[nodiscard]] std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

class UnknownIdentifierError : public ParseError {
 public:
  UnknownIdentifierError(const std::string& name, std::size_t position)
      : ParseError("unknown identifier '" + name + "'", position), name_(name) {}
  [[nodiscard]] const std::string& name() const { return name_; }

 private:
  std::string name_;
};

/// Transcendental argument outside the admissible linear class.
class ArgumentClassError : public Error {
 public:
  using Error::Error;
};

class DerivativeError : public Error {
 public:
  using Error::Error;
};

class CyclicBindingError : public Error {
 public:
  using Error::Error;
};

class CollectError : public Error {
 public:
  using Error::Error;
};

class EvaluationError : public Error {
 public:
  using Error::Error;
};

/// Evaluation hit a singularity (tan pole, vanishing denominator).
class PoleError : public EvaluationError {
 public:
  using EvaluationError::EvaluationError;
};

class DivisionByZeroError : public Error {
 public:
  using Error::Error;
};

/// Elimination pivot vanishes identically.
class DegeneratePivotError : public Error {
 public:
  using Error::Error;
};

/// Contract violation on inputs of a higher-level operation.
class DomainError : public Error {
 public:
  using Error::Error;
};

}  // namespace lieforge
