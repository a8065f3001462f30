// Copyright 2026 the textprep authors.
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

#ifndef TEXTPREP_ERRORS_H_
#define TEXTPREP_ERRORS_H_

#include <stdexcept>
#include <string>

namespace textprep {

// Exit codes used by the CLI: 1 for bad input, 2 for a violated internal
// contract.
enum class ErrorKind { kInput = 1, kContract = 2 };

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}
  ErrorKind kind() const { return kind_; }
  int exit_code() const { return static_cast<int>(kind_); }

 private:
  ErrorKind kind_;
};

// Malformed input record (wrong field count, bad UTF-8, ...).
class ParseError : public Error {
 public:
  explicit ParseError(const std::string& m) : Error(ErrorKind::kInput, m) {}
};

// Well-formed record whose content is structurally invalid (IDS arity
// mismatch, trailing tokens, reserved codepoint misuse).
class StructuralError : public Error {
 public:
  explicit StructuralError(const std::string& m) : Error(ErrorKind::kInput, m) {}
};

// Record referring to an entity that does not exist.
class ReferenceError : public Error {
 public:
  explicit ReferenceError(const std::string& m) : Error(ErrorKind::kInput, m) {}
};

// Token material that cannot be mapped back to characters.
class CompositionError : public Error {
 public:
  CompositionError(const std::string& m, std::size_t word_index,
                   std::size_t offset)
      : Error(ErrorKind::kInput, m), word_index_(word_index), offset_(offset) {}
  std::size_t word_index() const { return word_index_; }
  std::size_t offset() const { return offset_; }

 private:
  std::size_t word_index_;
  std::size_t offset_;
};

// Ill-formed derived text (e.g. a line ending in a continuation marker).
class FormatError : public Error {
 public:
  explicit FormatError(const std::string& m) : Error(ErrorKind::kInput, m) {}
};

// Invalid operation parameters.
class ConfigError : public Error {
 public:
  explicit ConfigError(const std::string& m) : Error(ErrorKind::kInput, m) {}
};

class IoError : public Error {
 public:
  explicit IoError(const std::string& m) : Error(ErrorKind::kInput, m) {}
};

// A broken invariant inside the library itself.
class ContractError : public Error {
 public:
  explicit ContractError(const std::string& m)
      : Error(ErrorKind::kContract, m) {}
};

}  // namespace textprep

#endif  // TEXTPREP_ERRORS_H_
