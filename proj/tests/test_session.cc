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

#include <atomic>
#include <filesystem>
#include <fstream>
#include <random>
#include <string>
#include <thread>
#include <vector>

#include "doctest.h"
#include "httplib.h"
#include "json.hpp"
#include "minilog/kernel.h"
#include "minilog/session.h"
#include "minilog/tactics.h"
#include "minilog/textio.h"
#include "support/helpers.h"

using namespace minilog;
using minilog::testing::read_data;
using nlohmann::json;

namespace {

namespace fs = std::filesystem;

struct TempDir {
  fs::path path;
  TempDir() {
    std::random_device rd;
    path = fs::temp_directory_path() / ("minilog-test-" + std::to_string(rd()));
    fs::create_directories(path);
  }
  ~TempDir() {
    std::error_code ec;
    fs::remove_all(path, ec);
  }
};

json body_of(const Response& r) { return json::parse(r.body); }

std::string theorem_body(const std::string& text) { return json{{"theorem", text}}.dump(); }
std::string tactic_body(const std::string& text) { return json{{"text", text}}.dump(); }

std::string create(SessionService& service, const std::string& theorem) {
  Response r = service.handle("POST", "/sessions", theorem_body(theorem));
  REQUIRE(r.status == 201);
  return body_of(r)["id"].get<std::string>();
}

Response post_tactic(SessionService& service, const std::string& id, const std::string& text) {
  return service.handle("POST", "/sessions/" + id + "/tactic", tactic_body(text));
}

// The stored script replays to the stored goals.
void require_invariant(SessionService& service, const std::string& id, const std::string& theorem) {
  json state = body_of(service.handle("GET", "/sessions/" + id, ""));
  ReplayResult r = replay(parse_theorem(theorem).sequent(), parse_script(state["script"].get<std::string>()));
  REQUIRE(r.status != ReplayResult::Status::TacticFailed);
  std::vector<std::string> goals;
  for (const Sequent& g : r.final_state().goals()) goals.push_back(render_sequent(g));
  REQUIRE(state["goals"].get<std::vector<std::string>>() == goals);
  REQUIRE(state["terminal"].get<bool>() == r.final_state().terminal());
}

const char* kExample3Steps[] = {
    "intro.",  "apply H3.", "assert (q \\/ r) as H4.", "apply H1.", "trivial.",
    "destruct H4.", "apply H2.", "trivial.", "trivial.",
};

}  // namespace

TEST_CASE("session flow for Example 3") {
  SessionService service;
  const std::string theorem = read_data("example3.thm");
  Response created = service.handle("POST", "/sessions", theorem_body(theorem));
  REQUIRE(created.status == 201);
  json state = body_of(created);
  const std::string id = state["id"];
  CHECK(state["theorem"] == "Example1");
  CHECK(state["goals"] == json::array({"p -> q \\/ r, q -> r, r -> s |- p -> s"}));
  CHECK(state["terminal"] == false);
  CHECK(state["detail"][0]["hypotheses"][0]["label"] == "H1");
  CHECK(service.size() == 1);

  Response intro = post_tactic(service, id, "intro.");
  REQUIRE(intro.status == 200);
  CHECK(body_of(intro)["goals"] == json::array({"p -> q \\/ r, q -> r, r -> s, p |- s"}));

  Response bad = post_tactic(service, id, "split.");
  CHECK(bad.status == 422);
  CHECK(body_of(bad)["code"] == "TacticMismatch");
  CHECK(body_of(bad)["step"] == 2);

  Response early = service.handle("GET", "/sessions/" + id + "/derivation", "");
  CHECK(early.status == 409);
  CHECK(body_of(early)["code"] == "NotTerminal");

  for (size_t i = 1; i < std::size(kExample3Steps); ++i) {
    CAPTURE(kExample3Steps[i]);
    Response r = post_tactic(service, id, kExample3Steps[i]);
    REQUIRE(r.status == 200);
    require_invariant(service, id, theorem);
  }
  json done = body_of(service.handle("GET", "/sessions/" + id, ""));
  CHECK(done["terminal"] == true);
  CHECK(done["goals"].empty());
  CHECK(done["history"].size() == 9);

  Response script = service.handle("GET", "/sessions/" + id + "/script", "");
  CHECK(script.content_type == "text/plain");
  CHECK(render_script(parse_script(script.body)) == render_script(parse_script(read_data("example3.script"))));

  Response exported = service.handle("GET", "/sessions/" + id + "/derivation", "");
  REQUIRE(exported.status == 200);
  DerivationFile file = parse_derivation(exported.body);
  CHECK(check_derivation(file.derivation).accepted());
  CHECK(check_judgment_equal(file.derivation.conclusion(), parse_theorem(theorem).sequent()));
  REQUIRE(file.aliases.size() == 1);
  CHECK(file.aliases[0].name == "Gamma");

  Response after = post_tactic(service, id, "trivial.");
  CHECK(after.status == 422);
  CHECK(body_of(after)["code"] == "TerminalState");
  CHECK(body_of(after)["step"] == 10);
}

TEST_CASE("several commands apply atomically") {
  SessionService service;
  const std::string theorem = read_data("example3.thm");
  const std::string id = create(service, theorem);

  Response partial = post_tactic(service, id, "intro. apply H3. split.");
  CHECK(partial.status == 422);
  CHECK(body_of(partial)["step"] == 3);
  CHECK(body_of(service.handle("GET", "/sessions/" + id, ""))["history"].empty());

  Response syntax = post_tactic(service, id, "intro. frobnicate.");
  CHECK(syntax.status == 422);
  CHECK(body_of(syntax)["code"] == "UnknownTactic");

  Response both = post_tactic(service, id, "intro. apply H3.");
  CHECK(both.status == 200);
  CHECK(body_of(both)["history"].size() == 2);
  require_invariant(service, id, theorem);
}

TEST_CASE("undo") {
  SessionService service;
  const std::string theorem = read_data("example3.thm");
  const std::string id = create(service, theorem);
  Response none = service.handle("POST", "/sessions/" + id + "/undo", "");
  CHECK(none.status == 422);
  CHECK(body_of(none)["code"] == "EmptyHistory");

  json before = body_of(service.handle("GET", "/sessions/" + id, ""));
  post_tactic(service, id, "intro.");
  Response undone = service.handle("POST", "/sessions/" + id + "/undo", "");
  REQUIRE(undone.status == 200);
  CHECK(body_of(undone) == before);
  require_invariant(service, id, theorem);
}

TEST_CASE("request errors") {
  SessionService service;
  CHECK(service.handle("GET", "/sessions/nope", "").status == 404);
  CHECK(service.handle("GET", "/elsewhere", "").status == 404);
  CHECK(service.handle("POST", "/sessions", "{not json").status == 400);
  CHECK(service.handle("POST", "/sessions", "{\"theorem\": 3}").status == 400);
  Response parse = service.handle("POST", "/sessions", theorem_body("theorem T : p ->"));
  CHECK(parse.status == 400);
  CHECK(body_of(parse)["code"] == "SyntaxError");
  const std::string id = create(service, "theorem T : p -> p");
  CHECK(service.handle("POST", "/sessions/" + id + "/tactic", "{}").status == 400);
  CHECK(service.handle("GET", "/sessions/" + id + "/bogus", "").status == 404);
  CHECK(post_tactic(service, id, "apply H9.").status == 422);
  CHECK(body_of(post_tactic(service, id, "apply H9."))["code"] == "UnknownLabel");
  CHECK(body_of(post_tactic(service, id, "intro. trivial. trivial."))["code"] == "TerminalState");
  CHECK(body_of(post_tactic(service, id, "trivial."))["code"] == "NotTrivial");
}

TEST_CASE("persistence replays session logs") {
  TempDir dir;
  const std::string theorem = read_data("example3.thm");
  std::string id;
  json expected;
  {
    SessionService service(dir.path);
    id = create(service, theorem);
    post_tactic(service, id, "intro. apply H3.");
    post_tactic(service, id, "split.");
    service.handle("POST", "/sessions/" + id + "/undo", "");
    post_tactic(service, id, "assert (q \\/ r) as H4.");
    expected = body_of(service.handle("GET", "/sessions/" + id, ""));
    create(service, "theorem Other : p -> p");
  }
  {
    SessionService reloaded(dir.path);
    CHECK(reloaded.size() == 2);
    CHECK(body_of(reloaded.handle("GET", "/sessions/" + id, "")) == expected);
    require_invariant(reloaded, id, theorem);
  }
  // A damaged tail keeps the replayable prefix.
  {
    std::ofstream log(dir.path / (id + ".log"), std::ios::app);
    log << "{\"tactic\": \"split.\"}\n{\"tactic\": \"apply H1.\"}\n";
  }
  SessionService damaged(dir.path);
  CHECK(body_of(damaged.handle("GET", "/sessions/" + id, "")) == expected);
}

TEST_CASE("concurrent requests") {
  SessionService service;
  const std::string shared = create(service, "hyp H1 : p\ntheorem T : p");
  constexpr int kThreads = 8;
  constexpr int kSteps = 20;
  std::atomic<int> failures{0};
  std::vector<std::thread> threads;
  for (int t = 0; t < kThreads; ++t) {
    threads.emplace_back([&] {
      for (int i = 0; i < kSteps; ++i) {
        if (post_tactic(service, shared, "assert (p).").status != 200) ++failures;
        Response own = service.handle("POST", "/sessions", theorem_body("theorem T : p -> p"));
        if (own.status != 201) {
          ++failures;
          continue;
        }
        const std::string id = json::parse(own.body)["id"];
        if (post_tactic(service, id, "intro. trivial.").status != 200) ++failures;
        if (service.handle("GET", "/sessions/" + shared, "").status != 200) ++failures;
      }
    });
  }
  for (std::thread& th : threads) th.join();
  CHECK(failures == 0);
  CHECK(service.size() == 1 + kThreads * kSteps);
  json state = body_of(service.handle("GET", "/sessions/" + shared, ""));
  CHECK(state["history"].size() == kThreads * kSteps);
  CHECK(state["goals"].size() == 1 + kThreads * kSteps);
}

TEST_CASE("HTTP transport") {
  SessionService service;
  HttpServer server(service);
  const int port = server.bind("127.0.0.1", 0);
  REQUIRE(port > 0);
  std::thread runner([&] { server.run(); });
  server.wait_until_ready();

  httplib::Client client("127.0.0.1", port);
  auto created = client.Post("/sessions", theorem_body(read_data("example3.thm")), "application/json");
  REQUIRE(created);
  CHECK(created->status == 201);
  CHECK(created->get_header_value("Access-Control-Allow-Origin") == "*");
  const std::string id = json::parse(created->body)["id"];

  auto step = client.Post("/sessions/" + id + "/tactic", tactic_body("intro."), "application/json");
  REQUIRE(step);
  CHECK(step->status == 200);
  CHECK(json::parse(step->body)["goals"][0] == "p -> q \\/ r, q -> r, r -> s, p |- s");

  auto bad = client.Post("/sessions/" + id + "/tactic", tactic_body("split."), "application/json");
  REQUIRE(bad);
  CHECK(bad->status == 422);

  auto missing = client.Get("/sessions/unknown");
  REQUIRE(missing);
  CHECK(missing->status == 404);

  auto preflight = client.Options("/sessions");
  REQUIRE(preflight);
  CHECK(preflight->status == 204);

  auto script = client.Get("/sessions/" + id + "/script");
  REQUIRE(script);
  CHECK(script->body == "intro.\n");

  server.stop();
  runner.join();
}
