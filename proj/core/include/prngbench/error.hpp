// Copyright 2026 The prngbench Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef PRNGBENCH_ERROR_HPP_
#define PRNGBENCH_ERROR_HPP_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace prngbench {

// Root of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Argument outside the mathematical domain of a function.
class DomainError : public Error {
 public:
  using Error::Error;
};

// Test parameters that violate a test's preconditions.
class ParameterError : public Error {
 public:
  using Error::Error;
};

// A battery would draw more words than the configured ceiling.
class BudgetError : public Error {
 public:
  using Error::Error;
};

class IoError : public Error {
 public:
  using Error::Error;
};

// Malformed input data: dumps, report records, KAT files.
class FormatError : public Error {
 public:
  using Error::Error;
};

// File written by a newer (or unknown) schema version.
class SchemaVersionError : public FormatError {
 public:
  using FormatError::FormatError;
};

// Configuration file problem; line is 1-based, 0 when unknown.
class ConfigError : public Error {
 public:
  ConfigError(const std::string& message, std::size_t line)
      : Error(line > 0 ? "line " + std::to_string(line) + ": " + message
                       : message),
        line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

// Reports mixing generators or battery configurations.
class MismatchError : public Error {
 public:
  using Error::Error;
};

}  // namespace prngbench

#endif  // PRNGBENCH_ERROR_HPP_
