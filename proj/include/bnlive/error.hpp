// Copyright 2026 The bnlive Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//   http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef BNLIVE_ERROR_HPP_
#define BNLIVE_ERROR_HPP_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace bnlive {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A network failed validation.
class ModelError : public Error {
 public:
  enum class Kind { kEmptyInitials, kDanglingStateRef, kDanglingMessageRef, kDuplicateName };

  ModelError(Kind kind, std::string entity, std::size_t line = 0)
      : Error(describe(kind, entity, line)), kind_(kind), entity_(std::move(entity)), line_(line) {}

  Kind kind() const { return kind_; }
  const std::string& entity() const { return entity_; }
  /// 1-based source line, 0 when not attributable.
  std::size_t line() const { return line_; }

  static const char* kind_name(Kind kind) {
    switch (kind) {
      case Kind::kEmptyInitials: return "EmptyInitials";
      case Kind::kDanglingStateRef: return "DanglingStateRef";
      case Kind::kDanglingMessageRef: return "DanglingMessageRef";
      case Kind::kDuplicateName: return "DuplicateName";
    }
    return "ModelError";
  }

 private:
  static std::string describe(Kind kind, const std::string& entity, std::size_t line) {
    std::string msg = kind_name(kind);
    if (!entity.empty()) msg += ": '" + entity + "'";
    if (line != 0) msg += " at line " + std::to_string(line);
    return msg;
  }

  Kind kind_;
  std::string entity_;
  std::size_t line_;
};

class SyntaxError : public Error {
 public:
  SyntaxError(std::size_t line, const std::string& message)
      : Error("syntax error at line " + std::to_string(line) + ": " + message), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

/// Arity or seed/constraint mismatch passed to a closure operator.
class ClosureError : public Error {
 public:
  enum class Kind { kArityMismatch, kSeedOutsideConstraint };
  ClosureError(Kind kind, const std::string& message) : Error(message), kind_(kind) {}
  Kind kind() const { return kind_; }

 private:
  Kind kind_;
};

/// An explicit search or construction exceeded its configured budget.
class CapExceeded : public Error {
 public:
  using Error::Error;
};

class InvalidPath : public Error {
 public:
  using Error::Error;
};

class InvalidWitness : public Error {
 public:
  using Error::Error;
};

/// The stabilized constraint admits no internal send, so no cycle exists.
class TrivialFixedPoint : public Error {
 public:
  using Error::Error;
};

}  // namespace bnlive

#endif  // BNLIVE_ERROR_HPP_
