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

#ifndef MINILOG_SESSION_H_
#define MINILOG_SESSION_H_

// Interactive proof sessions behind a transport-neutral request handler.
//
//   POST /sessions                 {"theorem": text}   -> 201 state
//   GET  /sessions/{id}                                -> state
//   POST /sessions/{id}/tactic     {"text": commands}  -> state | 422 error
//   POST /sessions/{id}/undo                           -> state | 422 error
//   GET  /sessions/{id}/derivation                     -> text  | 409
//   GET  /sessions/{id}/script                         -> text
//
// A state is {"id", "theorem", "goals", "detail", "script", "history",
// "terminal"}; an error is {"step", "code", "message"}. With a persistence
// directory every session is an append-only log replayed at startup.

#include <filesystem>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <shared_mutex>
#include <string>
#include <string_view>

#include "minilog/tactics.h"
#include "minilog/textio.h"

namespace minilog {

struct Response {
  int status = 200;
  std::string body;
  std::string content_type = "application/json";
};

class SessionService {
 public:
  explicit SessionService(std::optional<std::filesystem::path> persist_dir = std::nullopt);
  ~SessionService();

  SessionService(const SessionService&) = delete;
  SessionService& operator=(const SessionService&) = delete;

  // Safe to call concurrently; mutations of one session are serialized.
  Response handle(std::string_view method, std::string_view path, std::string_view body);

  size_t size() const;

 private:
  struct Session;

  std::shared_ptr<Session> find(const std::string& id) const;
  Response create(std::string_view body);
  Response step(Session& s, std::string_view body);
  Response undo_step(Session& s);
  Response derivation(Session& s);
  void load();
  void append_log(const Session& s, const std::string& record);
  std::string new_id();

  std::optional<std::filesystem::path> persist_dir_;
  mutable std::shared_mutex mutex_;
  std::map<std::string, std::shared_ptr<Session>> sessions_;
};

// HTTP transport for a SessionService.
class HttpServer {
 public:
  explicit HttpServer(SessionService& service);
  ~HttpServer();

  // Port 0 picks a free port. Returns the bound port, or -1 on failure.
  int bind(const std::string& host, int port);
  // Serves until stop() is called from another thread.
  void run();
  // Blocks until run() is accepting connections.
  void wait_until_ready() const;
  void stop();

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

}  // namespace minilog

#endif  // MINILOG_SESSION_H_
