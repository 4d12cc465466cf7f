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

#include "minilog/error.h"

#include <sstream>

namespace minilog {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::SyntaxError: return "SyntaxError";
    case ErrorCode::ArityError: return "ArityError";
    case ErrorCode::UnknownTactic: return "UnknownTactic";
    case ErrorCode::DuplicateLabel: return "DuplicateLabel";
    case ErrorCode::BadIndex: return "BadIndex";
    case ErrorCode::AmbiguousMatch: return "AmbiguousMatch";
    case ErrorCode::ContextMismatch: return "ContextMismatch";
    case ErrorCode::TacticMismatch: return "TacticMismatch";
    case ErrorCode::UnknownLabel: return "UnknownLabel";
    case ErrorCode::NoMatch: return "NoMatch";
    case ErrorCode::NotTrivial: return "NotTrivial";
    case ErrorCode::TerminalState: return "TerminalState";
    case ErrorCode::EmptyHistory: return "EmptyHistory";
    case ErrorCode::MalformedTrace: return "MalformedTrace";
    case ErrorCode::InvalidDerivation: return "InvalidDerivation";
    case ErrorCode::IoError: return "IoError";
  }
  return "Unknown";
}

std::string Error::describe() const {
  std::ostringstream out;
  out << to_string(code_);
  if (line_ > 0) out << " at " << line_ << ":" << column_;
  out << ": " << what();
  return out.str();
}

}  // namespace minilog
