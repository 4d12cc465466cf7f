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

#include "minilog/cli.h"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "minilog/autoprove.h"
#include "minilog/equivalence.h"
#include "minilog/error.h"
#include "minilog/kernel.h"
#include "minilog/session.h"
#include "minilog/textio.h"

namespace minilog {

namespace {

constexpr int kOk = 0;
constexpr int kFailed = 1;
constexpr int kBadInput = 2;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::IoError, "cannot read " + path);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  out << text;
  if (!out) throw Error(ErrorCode::IoError, "cannot write " + path);
}

std::string where(const std::string& path, const Error& e) {
  return "minilog: " + path + ": " + e.describe() + "\n";
}

int check(const std::string& path, std::ostream& out, std::ostream& err) {
  DerivationFile file;
  try {
    file = parse_derivation(read_file(path));
  } catch (const Error& e) {
    err << where(path, e);
    return kBadInput;
  }
  CheckResult r = check_derivation(file.derivation);
  if (r.accepted()) {
    out << "Accept: " << file.derivation.lines.size() << " line(s), "
        << render_sequent(file.derivation.conclusion()) << "\n";
    return kOk;
  }
  out << "Reject: line " << r.line << ": " << to_string(r.reason) << ": " << r.message << "\n";
  return kFailed;
}

struct ReplayOptions {
  std::string theorem;
  std::string script;
  std::string emit;
  bool trace = false;
};

int replay_cmd(const ReplayOptions& o, std::ostream& out, std::ostream& err) {
  SymbolTable symbols;
  std::optional<TheoremFile> theorem;
  Script script;
  try {
    theorem = parse_theorem(read_file(o.theorem), &symbols);
  } catch (const Error& e) {
    err << where(o.theorem, e);
    return kBadInput;
  }
  try {
    script = parse_script(read_file(o.script), &symbols);
  } catch (const Error& e) {
    err << where(o.script, e);
    return kBadInput;
  }

  ReplayResult r = replay(theorem->sequent(), script);
  if (o.trace) out << render_trace(r);
  if (r.status == ReplayResult::Status::TacticFailed) {
    err << "minilog: step " << r.failed_step << " (" << render_tactic(script[r.failed_step - 1])
        << "): " << to_string(r.error->code()) << ": " << r.error->what() << "\n";
    return kFailed;
  }
  if (!r.success()) {
    err << "minilog: " << r.final_state().goals().size() << " goal(s) remaining\n";
    return kFailed;
  }
  out << "Proof complete: " << theorem->name << " in " << script.size() << " tactic(s)\n";

  if (!o.emit.empty()) {
    try {
      Derivation d = tactics_to_derivation(make_trace(r));
      CheckResult c = check_derivation(d);
      if (!c.accepted()) {
        err << "minilog: emitted derivation rejected at line " << c.line << ": " << c.message
            << "\n";
        return kFailed;
      }
      DerivationFile file{{}, std::move(d)};
      if (!theorem->hypotheses.empty()) {
        std::string name = "Gamma";
        for (int i = 1; symbols.predicates.contains(name); ++i) name = "Gamma" + std::to_string(i);
        ContextAlias alias{name, {}};
        for (const Hypothesis& h : theorem->hypotheses) alias.formulas.push_back(h.formula);
        file.aliases.push_back(std::move(alias));
      }
      const bool as_json = std::filesystem::path(o.emit).extension() == ".json";
      write_file(o.emit, as_json ? render_derivation_json(file) : render_derivation(file));
      out << "Derivation: " << file.derivation.lines.size() << " line(s) written to " << o.emit
          << "\n";
    } catch (const Error& e) {
      err << where(o.emit, e);
      return kBadInput;
    }
  }
  return kOk;
}

struct AutoOptions {
  std::string theorem;
  SearchConfig config;
  bool no_lemmas = false;
};

int auto_cmd(AutoOptions o, std::ostream& out, std::ostream& err) {
  std::optional<TheoremFile> theorem;
  try {
    theorem = parse_theorem(read_file(o.theorem));
  } catch (const Error& e) {
    err << where(o.theorem, e);
    return kBadInput;
  }
  if (o.no_lemmas) o.config.lemma_policy = LemmaPolicy::None;
  SearchResult r = auto_search(theorem->sequent(), o.config);
  if (!r.found()) {
    err << "NotFound(" << to_string(r.reason) << ") with depth bound " << o.config.max_depth
        << ": last iteration at depth " << r.depth << ", " << r.nodes << " node(s)\n";
    return kFailed;
  }
  out << render_script(r.script);
  err << "Found at depth " << r.depth << " after " << r.nodes << " node(s)\n";
  return kOk;
}

struct ServeOptions {
  std::string host = "127.0.0.1";
  int port = 8080;
  std::string persist;
};

int serve_cmd(const ServeOptions& o, std::ostream& out, std::ostream& err) {
  std::optional<std::filesystem::path> dir;
  if (!o.persist.empty()) dir = o.persist;
  SessionService service(dir);
  HttpServer server(service);
  int port = server.bind(o.host, o.port);
  if (port < 0) {
    err << "minilog: cannot listen on " << o.host << ":" << o.port << "\n";
    return kBadInput;
  }
  out << "minilog: serving " << service.size() << " session(s) on http://" << o.host << ":"
      << port << "\n"
      << std::flush;
  server.run();
  return kOk;
}

int default_port() {
  if (const char* env = std::getenv("MINILOG_PORT")) {
    try {
      return std::stoi(env);
    } catch (const std::exception&) {
    }
  }
  return 8080;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Tactic-based proof assistant for minimal first-order logic", "minilog"};
  app.require_subcommand(1);

  std::string check_path;
  auto* check_cmd = app.add_subcommand("check", "Check a derivation file");
  check_cmd->add_option("derivation", check_path, "Derivation file (text or JSON)")->required();

  ReplayOptions replay_opts;
  auto* replay_sub = app.add_subcommand("replay", "Replay a tactic script against a theorem");
  replay_sub->add_option("theorem", replay_opts.theorem, "Theorem file")->required();
  replay_sub->add_option("script", replay_opts.script, "Script file")->required();
  replay_sub->add_option("--emit-derivation", replay_opts.emit,
                         "Write the compiled derivation (.json for the JSON form)");
  replay_sub->add_flag("--trace", replay_opts.trace, "Print every goal state");

  AutoOptions auto_opts;
  auto* auto_sub = app.add_subcommand("auto", "Search for a tactic script");
  auto_sub->add_option("theorem", auto_opts.theorem, "Theorem file")->required();
  auto_sub->add_option("--depth", auto_opts.config.max_depth, "Maximum proof height")
      ->check(CLI::PositiveNumber);
  auto_sub->add_option("--max-nodes", auto_opts.config.max_nodes, "Tactic application budget")
      ->check(CLI::PositiveNumber);
  auto_sub->add_flag("--no-lemmas", auto_opts.no_lemmas, "Never assert lemmas");

  ServeOptions serve_opts;
  serve_opts.port = default_port();
  auto* serve_sub = app.add_subcommand("serve", "Run the HTTP session service");
  serve_sub->add_option("--host", serve_opts.host, "Interface to bind");
  serve_sub->add_option("--port", serve_opts.port, "Port (default $MINILOG_PORT or 8080)")
      ->check(CLI::Range(0, 65535));
  serve_sub->add_option("--persist", serve_opts.persist, "Directory of session logs");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kOk : kBadInput;
  }

  if (check_cmd->parsed()) return check(check_path, out, err);
  if (replay_sub->parsed()) return replay_cmd(replay_opts, out, err);
  if (auto_sub->parsed()) return auto_cmd(auto_opts, out, err);
  return serve_cmd(serve_opts, out, err);
}

}  // namespace minilog
