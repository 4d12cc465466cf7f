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

#include <chrono>
#include <string>
#include <vector>

#include "doctest.h"
#include "minilog/autoprove.h"
#include "minilog/equivalence.h"
#include "minilog/kernel.h"
#include "minilog/tactics.h"
#include "minilog/textio.h"
#include "support/generators.h"
#include "support/helpers.h"

using namespace minilog;
using minilog::testing::error_code;
using minilog::testing::read_data;
using minilog::testing::Rng;

namespace {

Sequent theorem(const std::string& name) { return parse_theorem(read_data(name + ".thm")).sequent(); }

Sequent goal(const std::vector<std::string>& hyps, const std::string& concl) {
  std::vector<Formula> ctx;
  for (const std::string& h : hyps) ctx.push_back(parse_formula(h));
  return Sequent::of(ctx, parse_formula(concl));
}

void require_replays(const Sequent& g, const SearchResult& r) {
  REQUIRE(r.found());
  ReplayResult replayed = replay(g, r.script);
  CAPTURE(render_script(r.script));
  REQUIRE(replayed.success());
  Derivation d = tactics_to_derivation(make_trace(replayed));
  REQUIRE(check_derivation(d).accepted());
}

// Formulas asserted by a script must be consequents of implications that are
// hypotheses of the goal the assert was applied to.
void require_policy_lemmas(const Sequent& g, const Script& script) {
  ReplayResult r = replay(g, script);
  for (size_t i = 0; i < script.size(); ++i) {
    const auto* a = std::get_if<tactic::Assert>(&script[i]);
    if (!a) continue;
    const Sequent& head = r.states[i].goals().front();
    bool consequent = false;
    for (const Hypothesis& h : head.context)
      consequent |= h.formula.is_imp() && alpha_eq(h.formula.rhs(), a->lemma);
    REQUIRE(consequent);
    REQUIRE_FALSE(head.contains(a->lemma));
  }
}

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

}  // namespace

TEST_CASE("Examples 3 and 4 are found within depth 12") {
  for (const char* name : {"example3", "example4"}) {
    CAPTURE(std::string(name));
    Sequent g = theorem(name);
    auto start = std::chrono::steady_clock::now();
    SearchResult r = auto_search(g, {12, 100000, LemmaPolicy::ImplicationConsequents});
    CHECK(seconds_since(start) < 1.0);
    require_replays(g, r);
    CHECK(r.depth <= 12);
    require_policy_lemmas(g, r.script);
  }
}

TEST_CASE("Peirce's law is not found") {
  SearchResult r = auto_search(theorem("peirce"), {12, 100000});
  CHECK_FALSE(r.found());
  CHECK(r.reason == SearchResult::Reason::DepthExhausted);
  CHECK(to_string(r.reason) == "DepthExhausted");
}

TEST_CASE("small theorems") {
  const std::vector<std::pair<std::vector<std::string>, std::string>> provable = {
      {{}, "p -> p"},
      {{}, "p /\\ q -> q /\\ p"},
      {{}, "p \\/ q -> q \\/ p"},
      {{}, "(p -> q) -> (q -> r) -> p -> r"},
      {{"forall x. P(x)"}, "P(f(c()))"},
      {{"forall x. P(x) -> Q(x)", "P(c())"}, "P(c()) -> Q(c())"},
      {{}, "(forall x. P(x)) -> exists y. P(y)"},
      {{}, "(exists x. P(x) /\\ Q(x)) -> exists y. P(y)"},
      {{}, "(forall x. P(x)) -> forall y. P(y)"},
  };
  for (const auto& [hyps, concl] : provable) {
    CAPTURE(concl);
    Sequent g = goal(hyps, concl);
    require_replays(g, auto_search(g));
  }
}

TEST_CASE("lemmas are limited to consequents of implication hypotheses") {
  // Needs the instance P(c()) -> Q(c()) as a lemma, which the policy never
  // proposes because the implication sits under a quantifier.
  Sequent g = goal({"forall x. P(x) -> Q(x)", "P(c())"}, "Q(c())");
  CHECK_FALSE(auto_search(g).found());
  CHECK(replay(g, parse_script("assert (P(c()) -> Q(c())). apply H1. apply H. trivial.")).success());
}

TEST_CASE("budgets") {
  Sequent g = theorem("example4");
  SearchResult tight = auto_search(g, {12, 50});
  CHECK_FALSE(tight.found());
  CHECK(tight.reason == SearchResult::Reason::NodesExhausted);
  CHECK(tight.nodes <= 50);

  SearchResult shallow = auto_search(g, {2, 100000});
  CHECK_FALSE(shallow.found());
  CHECK(shallow.reason == SearchResult::Reason::DepthExhausted);

  CHECK(error_code([&] { auto_search(g, {0, 10}); }) == ErrorCode::SyntaxError);
  CHECK(error_code([&] { auto_search(g, {3, 0}); }) == ErrorCode::SyntaxError);
}

TEST_CASE("without lemmas Example 3 is out of reach") {
  Sequent g = theorem("example3");
  SearchResult r = auto_search(g, {12, 100000, LemmaPolicy::None});
  CHECK_FALSE(r.found());
  for (const Tactic& t : auto_search(goal({}, "p /\\ q -> q /\\ p"), {12, 1000, LemmaPolicy::None}).script)
    CHECK_FALSE(std::holds_alternative<tactic::Assert>(t));
}

TEST_CASE("property: monotone in depth and deterministic") {
  const std::vector<Sequent> goals = {
      theorem("example3"),
      theorem("example4"),
      goal({}, "(p -> q) -> (q -> r) -> p -> r"),
      goal({}, "p /\\ q -> q /\\ p"),
  };
  for (const Sequent& g : goals) {
    CAPTURE(render_sequent(g));
    SearchResult base = auto_search(g);
    REQUIRE(base.found());
    for (int depth = base.depth; depth <= 12; ++depth) {
      SearchResult r = auto_search(g, {depth, 100000});
      REQUIRE(r.found());
      REQUIRE(render_script(r.script) == render_script(base.script));
    }
    SearchResult again = auto_search(g);
    CHECK(render_script(again.script) == render_script(base.script));
    CHECK(again.nodes == base.nodes);
    if (base.depth > 1) CHECK_FALSE(auto_search(g, {base.depth - 1, 100000}).found());
  }
}

TEST_CASE("property: found scripts replay and respect the lemma policy") {
  Rng rng(61);
  int found = 0;
  for (int i = 0; i < 300; ++i) {
    minilog::testing::GeneratedProof p = minilog::testing::random_proof(rng, 3, 3);
    SearchResult r = auto_search(p.goal, {8, 5000});
    if (!r.found()) continue;
    ++found;
    require_replays(p.goal, r);
    require_policy_lemmas(p.goal, r.script);
  }
  CHECK(found > 150);
}
