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

#include "minilog/session.h"

#include <chrono>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <vector>

#include "json.hpp"
#include "minilog/equivalence.h"

namespace minilog {

using nlohmann::json;

struct SessionService::Session {
  std::string id;
  std::string theorem_text;
  TheoremFile theorem;
  SymbolTable symbols;
  GoalState state;
  std::chrono::system_clock::time_point created;
  std::chrono::system_clock::time_point updated;
  std::mutex mutex;

  Session(std::string id_, std::string text, TheoremFile th, SymbolTable syms)
      : id(std::move(id_)),
        theorem_text(std::move(text)),
        theorem(std::move(th)),
        symbols(std::move(syms)),
        state(theorem.sequent()),
        created(std::chrono::system_clock::now()),
        updated(created) {}
};

namespace {

long long epoch_ms(std::chrono::system_clock::time_point t) {
  return std::chrono::duration_cast<std::chrono::milliseconds>(t.time_since_epoch()).count();
}

Response json_response(int status, const json& body) {
  return {status, body.dump() + "\n", "application/json"};
}

Response error_response(int status, std::string_view code, const std::string& message,
                        std::optional<int> step = std::nullopt) {
  json body{{"code", code}, {"message", message}};
  body["step"] = step ? json(*step) : json(nullptr);
  return json_response(status, body);
}

std::vector<std::string> split_path(std::string_view path) {
  std::vector<std::string> parts;
  std::string current;
  for (char c : path) {
    if (c == '?') break;
    if (c == '/') {
      if (!current.empty()) parts.push_back(std::move(current));
      current.clear();
    } else {
      current += c;
    }
  }
  if (!current.empty()) parts.push_back(std::move(current));
  return parts;
}

std::optional<json> parse_body(std::string_view body) {
  json doc = json::parse(body, nullptr, false);
  if (doc.is_discarded() || !doc.is_object()) return std::nullopt;
  return doc;
}

// Name for the theorem context in exported derivations that no formula of
// the problem uses as a predicate.
std::string alias_name(const SymbolTable& symbols) {
  std::string name = "Gamma";
  for (int i = 1; symbols.predicates.contains(name); ++i) name = "Gamma" + std::to_string(i);
  return name;
}

std::string script_text(const GoalState& s) { return render_script(s.history()); }

}  // namespace

SessionService::SessionService(std::optional<std::filesystem::path> persist_dir)
    : persist_dir_(std::move(persist_dir)) {
  if (persist_dir_) {
    std::filesystem::create_directories(*persist_dir_);
    load();
  }
}

SessionService::~SessionService() = default;

size_t SessionService::size() const {
  std::shared_lock lock(mutex_);
  return sessions_.size();
}

std::shared_ptr<SessionService::Session> SessionService::find(const std::string& id) const {
  std::shared_lock lock(mutex_);
  auto it = sessions_.find(id);
  return it == sessions_.end() ? nullptr : it->second;
}

std::string SessionService::new_id() {
  static thread_local std::mt19937_64 rng{std::random_device{}()};
  std::ostringstream out;
  out << std::hex << rng();
  std::string id = out.str();
  return std::string(16 - id.size(), '0') + id;
}

namespace {

json state_json(const std::string& id, const TheoremFile& theorem, const GoalState& state) {
  json goals = json::array();
  json detail = json::array();
  for (const Sequent& g : state.goals()) {
    goals.push_back(render_sequent(g));
    json hyps = json::array();
    for (const Hypothesis& h : g.context)
      hyps.push_back({{"label", h.label}, {"formula", render_formula(h.formula)}});
    detail.push_back({{"hypotheses", hyps}, {"conclusion", render_formula(g.conclusion)}});
  }
  json history = json::array();
  for (const Tactic& t : state.history()) history.push_back(render_tactic(t));
  return {
      {"id", id},
      {"theorem", theorem.name},
      {"goals", goals},
      {"detail", detail},
      {"script", script_text(state)},
      {"history", history},
      {"terminal", state.terminal()},
  };
}

}  // namespace

Response SessionService::handle(std::string_view method, std::string_view path,
                                std::string_view body) {
  const std::vector<std::string> parts = split_path(path);
  if (parts.empty() || parts[0] != "sessions")
    return error_response(404, "NotFound", "no such resource");
  try {
    if (parts.size() == 1) {
      if (method == "POST") return create(body);
      return error_response(405, "MethodNotAllowed", "use POST to create a session");
    }
    std::shared_ptr<Session> s = find(parts[1]);
    if (!s) return error_response(404, "NotFound", "unknown session '" + parts[1] + "'");
    std::lock_guard lock(s->mutex);
    const std::string action = parts.size() > 2 ? parts[2] : "";
    if (parts.size() > 3) return error_response(404, "NotFound", "no such resource");
    if (action.empty() && method == "GET")
      return json_response(200, state_json(s->id, s->theorem, s->state));
    if (action == "tactic" && method == "POST") return step(*s, body);
    if (action == "undo" && method == "POST") return undo_step(*s);
    if (action == "derivation" && method == "GET") return derivation(*s);
    if (action == "script" && method == "GET")
      return {200, script_text(s->state), "text/plain"};
    return error_response(404, "NotFound", "no such resource");
  } catch (const Error& e) {
    return error_response(500, to_string(e.code()), e.what());
  } catch (const std::exception& e) {
    return error_response(500, "InternalError", e.what());
  }
}

Response SessionService::create(std::string_view body) {
  std::optional<json> doc = parse_body(body);
  if (!doc || !doc->contains("theorem") || !(*doc)["theorem"].is_string())
    return error_response(400, "BadRequest", "expected {\"theorem\": <text>}");
  const std::string text = (*doc)["theorem"].get<std::string>();
  SymbolTable symbols;
  std::optional<TheoremFile> theorem;
  try {
    theorem = parse_theorem(text, &symbols);
  } catch (const Error& e) {
    return error_response(400, to_string(e.code()), e.describe());
  }
  auto s = std::make_shared<Session>(new_id(), text, *theorem, std::move(symbols));
  {
    std::unique_lock lock(mutex_);
    while (sessions_.contains(s->id)) s->id = new_id();
    sessions_.emplace(s->id, s);
  }
  append_log(*s, json{{"theorem", text}, {"created", epoch_ms(s->created)}}.dump());
  return json_response(201, state_json(s->id, s->theorem, s->state));
}

Response SessionService::step(Session& s, std::string_view body) {
  std::optional<json> doc = parse_body(body);
  if (!doc || !doc->contains("text") || !(*doc)["text"].is_string())
    return error_response(400, "BadRequest", "expected {\"text\": <tactic>}");
  const int first_step = static_cast<int>(s.state.history().size()) + 1;
  SymbolTable symbols = s.symbols;
  Script script;
  try {
    script = parse_script((*doc)["text"].get<std::string>(), &symbols);
  } catch (const Error& e) {
    return error_response(422, to_string(e.code()), e.describe(), first_step);
  }
  if (script.empty()) return error_response(422, "SyntaxError", "no tactic given", first_step);
  GoalState next = s.state;
  for (size_t i = 0; i < script.size(); ++i) {
    try {
      next = apply_tactic(next, script[i]);
    } catch (const Error& e) {
      return error_response(422, to_string(e.code()), e.what(),
                            first_step + static_cast<int>(i));
    }
  }
  s.state = std::move(next);
  s.symbols = std::move(symbols);
  s.updated = std::chrono::system_clock::now();
  for (const Tactic& t : script) append_log(s, json{{"tactic", render_tactic(t)}}.dump());
  return json_response(200, state_json(s.id, s.theorem, s.state));
}

Response SessionService::undo_step(Session& s) {
  try {
    s.state = undo(s.state);
  } catch (const Error& e) {
    return error_response(422, to_string(e.code()), e.what());
  }
  s.updated = std::chrono::system_clock::now();
  append_log(s, json{{"undo", true}}.dump());
  return json_response(200, state_json(s.id, s.theorem, s.state));
}

Response SessionService::derivation(Session& s) {
  if (!s.state.terminal())
    return error_response(409, "NotTerminal",
                          std::to_string(s.state.goals().size()) + " goal(s) remaining");
  Derivation d = tactics_to_derivation(make_trace(s.theorem.sequent(), s.state.history()));
  DerivationFile file{{}, std::move(d)};
  if (!s.theorem.hypotheses.empty()) {
    ContextAlias alias{alias_name(s.symbols), {}};
    for (const Hypothesis& h : s.theorem.hypotheses) alias.formulas.push_back(h.formula);
    file.aliases.push_back(std::move(alias));
  }
  return {200, render_derivation(file), "text/plain"};
}

void SessionService::append_log(const Session& s, const std::string& record) {
  if (!persist_dir_) return;
  std::ofstream out(*persist_dir_ / (s.id + ".log"), std::ios::app);
  out << record << "\n";
  if (!out) throw Error(ErrorCode::IoError, "cannot write session log for " + s.id);
}

void SessionService::load() {
  for (const auto& entry : std::filesystem::directory_iterator(*persist_dir_)) {
    if (entry.path().extension() != ".log") continue;
    std::ifstream in(entry.path());
    std::string line;
    std::shared_ptr<Session> s;
    while (std::getline(in, line)) {
      if (line.empty()) continue;
      json record = json::parse(line, nullptr, false);
      if (record.is_discarded()) break;
      try {
        if (!s) {
          SymbolTable symbols;
          std::string text = record.at("theorem").get<std::string>();
          TheoremFile th = parse_theorem(text, &symbols);
          s = std::make_shared<Session>(entry.path().stem().string(), text, th,
                                        std::move(symbols));
          if (record.contains("created"))
            s->created = std::chrono::system_clock::time_point(
                std::chrono::milliseconds(record["created"].get<long long>()));
        } else if (record.contains("tactic")) {
          Script script = parse_script(record["tactic"].get<std::string>(), &s->symbols);
          for (const Tactic& t : script) s->state = apply_tactic(s->state, t);
        } else if (record.contains("undo")) {
          s->state = undo(s->state);
        }
      } catch (const std::exception& e) {
        std::cerr << "minilog: " << entry.path().string() << ": " << e.what()
                  << "; keeping the replayable prefix\n";
        break;
      }
    }
    if (s) sessions_.emplace(s->id, std::move(s));
  }
}

}  // namespace minilog
