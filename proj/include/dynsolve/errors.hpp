// Copyright 2026 The dynsolve Authors
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

namespace dynsolve {

/// Broad failure class of an error. The CLI maps each category to a stable
/// process exit code.
enum class ErrorCategory {
  Input,      ///< malformed or inconsistent input data (exit 3)
  Model,      ///< robot model or solver configuration problem (exit 4)
  Numerical,  ///< numerical failure during evaluation (exit 5)
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCategory category, const std::string& what)
      : std::runtime_error(what), category_(category) {}

  ErrorCategory category() const noexcept { return category_; }

 private:
  ErrorCategory category_;
};

// ---------------------------------------------------------------- input

/// Malformed XML in a robot description. `line()` is 1-based.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t line);
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// Malformed trajectory file. `row()` is the 1-based physical line number.
class FormatError : public Error {
 public:
  FormatError(const std::string& what, std::size_t row);
  std::size_t row() const noexcept { return row_; }

 private:
  std::size_t row_;
};

class NonMonotonicTimeError : public Error {
 public:
  explicit NonMonotonicTimeError(std::size_t row);
  std::size_t row() const noexcept { return row_; }

 private:
  std::size_t row_;
};

class DimensionError : public Error {
 public:
  explicit DimensionError(const std::string& what)
      : Error(ErrorCategory::Input, what) {}
};

/// Non-finite or otherwise invalid numeric input.
class InputError : public Error {
 public:
  explicit InputError(const std::string& what)
      : Error(ErrorCategory::Input, what) {}
};

class MissingMeasurementError : public Error {
 public:
  explicit MissingMeasurementError(const std::string& what)
      : Error(ErrorCategory::Input, what) {}
};

class IoError : public Error {
 public:
  explicit IoError(const std::string& what)
      : Error(ErrorCategory::Input, what) {}
};

// ---------------------------------------------------------------- model

class ModelError : public Error {
 public:
  explicit ModelError(const std::string& what)
      : Error(ErrorCategory::Model, what) {}
};

class UnsupportedJointError : public Error {
 public:
  explicit UnsupportedJointError(const std::string& what)
      : Error(ErrorCategory::Model, what) {}
};

class EmptyChainError : public Error {
 public:
  explicit EmptyChainError(const std::string& what)
      : Error(ErrorCategory::Model, what) {}
};

class ConfigError : public Error {
 public:
  explicit ConfigError(const std::string& what)
      : Error(ErrorCategory::Model, what) {}
};

class UnknownPluginError : public Error {
 public:
  explicit UnknownPluginError(const std::string& what)
      : Error(ErrorCategory::Model, what) {}
};

class MissingParamError : public Error {
 public:
  explicit MissingParamError(const std::string& what)
      : Error(ErrorCategory::Model, what) {}
};

class UnsupportedOperationError : public Error {
 public:
  explicit UnsupportedOperationError(const std::string& what)
      : Error(ErrorCategory::Model, what) {}
};

// ------------------------------------------------------------ numerical

class AsymmetryError : public Error {
 public:
  explicit AsymmetryError(const std::string& what)
      : Error(ErrorCategory::Numerical, what) {}
};

class SingularInertiaError : public Error {
 public:
  explicit SingularInertiaError(const std::string& what)
      : Error(ErrorCategory::Numerical, what) {}
};

/// Finite inputs produced an infinite or NaN result (overflow).
class NonFiniteResultError : public Error {
 public:
  explicit NonFiniteResultError(const std::string& what)
      : Error(ErrorCategory::Numerical, what) {}
};

}  // namespace dynsolve
