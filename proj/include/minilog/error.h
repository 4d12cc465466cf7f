/* Copyright 2026 The Minilog Authors. All Rights Reserved.

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
==============================================================================*/

#ifndef MINILOG_ERROR_H_
#define MINILOG_ERROR_H_

#include <stdexcept>
#include <string>
#include <string_view>

namespace minilog {

// Machine-readable failure categories shared by every module. The names are
// part of the CLI and HTTP surface, so keep to_string() stable.
enum class ErrorCode {
  SyntaxError,
  ArityError,
  UnknownTactic,
  DuplicateLabel,
  BadIndex,
  AmbiguousMatch,
  ContextMismatch,
  TacticMismatch,
  UnknownLabel,
  NoMatch,
  NotTrivial,
  TerminalState,
  EmptyHistory,
  MalformedTrace,
  InvalidDerivation,
  IoError,
};

std::string_view to_string(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}
  Error(ErrorCode code, const std::string& message, int line, int column)
      : std::runtime_error(message), code_(code), line_(line), column_(column) {}

  ErrorCode code() const { return code_; }
  // 1-based source position, 0 when not applicable.
  int line() const { return line_; }
  int column() const { return column_; }

  // "SyntaxError at 3:7: expected ')'"
  std::string describe() const;

 private:
  ErrorCode code_;
  int line_ = 0;
  int column_ = 0;
};

}  // namespace minilog

#endif  // MINILOG_ERROR_H_
