// Copyright 2026 The qdist Authors
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

namespace qdist {

/** Base class of every error raised by the library. */
class QdistError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/** A gate or circuit violates a structural invariant. */
class InvalidCircuitError : public QdistError {
 public:
  using QdistError::QdistError;
};

/** An operation that cannot accept telegate markers was given one. */
class MarkerPresentError : public QdistError {
 public:
  using QdistError::QdistError;
};

/** Malformed QASM text. Line and column are 1-based. */
class QasmSyntaxError : public QdistError {
 public:
  QasmSyntaxError(const std::string& msg, std::size_t line, std::size_t column)
      : QdistError(
            "line " + std::to_string(line) + ", column " +
            std::to_string(column) + ": " + msg),
        line_(line),
        column_(column) {}
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

/** The QASM program uses a gate outside the supported set. */
class UnsupportedGateError : public QdistError {
 public:
  explicit UnsupportedGateError(const std::string& gate)
      : QdistError("unsupported gate \"" + gate + "\""), gate_(gate) {}
  const std::string& gate() const { return gate_; }

 private:
  std::string gate_;
};

/** The QASM program declares zero or more than one quantum register. */
class RegisterError : public QdistError {
 public:
  using QdistError::QdistError;
};

/** k-way partitioning is impossible for the given instance. */
class InfeasiblePartitionError : public QdistError {
 public:
  using QdistError::QdistError;
};

/** A matrix passed to two-qubit synthesis is not unitary. */
class NonUnitaryError : public QdistError {
 public:
  using QdistError::QdistError;
};

/** Mismatched or oversized widths. */
class WidthError : public QdistError {
 public:
  using QdistError::QdistError;
};

/** Malformed results CSV. Line is 1-based (the header is line 1). */
class CsvError : public QdistError {
 public:
  CsvError(const std::string& msg, std::size_t line)
      : QdistError("line " + std::to_string(line) + ": " + msg), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

}  // namespace qdist
