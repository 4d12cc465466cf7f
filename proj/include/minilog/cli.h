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

#ifndef MINILOG_CLI_H_
#define MINILOG_CLI_H_

// Command-line front end:
//   minilog check <derivation>
//   minilog replay <theorem> <script> [--emit-derivation FILE] [--trace]
//   minilog auto <theorem> [--depth N] [--max-nodes N] [--no-lemmas]
//   minilog serve [--host H] [--port P] [--persist DIR]
//
// Exit status: 0 success, 1 rejected / failed / not found, 2 usage, I/O or
// syntax errors.

#include <ostream>
#include <string>
#include <vector>

namespace minilog {

// args excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace minilog

#endif  // MINILOG_CLI_H_
