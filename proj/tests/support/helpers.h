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

#ifndef MINILOG_TESTS_HELPERS_H_
#define MINILOG_TESTS_HELPERS_H_

#include <fstream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>

#include "minilog/error.h"

namespace minilog::testing {

inline std::string data_path(const std::string& name) {
  return std::string(MINILOG_TEST_DATA_DIR) + "/" + name;
}

inline std::string read_data(const std::string& name) {
  std::ifstream in(data_path(name));
  if (!in) throw std::runtime_error("missing test data " + name);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

// Code of the minilog::Error thrown by f, or nullopt if it returns.
template <typename F>
std::optional<ErrorCode> error_code(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  return std::nullopt;
}

}  // namespace minilog::testing

#endif  // MINILOG_TESTS_HELPERS_H_
