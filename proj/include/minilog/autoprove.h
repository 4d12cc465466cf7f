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

#ifndef MINILOG_AUTOPROVE_H_
#define MINILOG_AUTOPROVE_H_

// Goal-directed backward search over the tactic transition system.
//
// Subgoals share no metavariables, so each one is searched independently
// and a proof is a tree of tactics. Search is depth-first with iterative
// deepening on the height of that tree. Candidates at each goal, in order:
//   1. trivial, apply on universal hypotheses whose body matches the goal;
//   2. the introduction tactic for the goal's connective (exists tries each
//      term of the pool);
//   3. apply on implications whose consequent is the goal, destruct on
//      conjunctions, disjunctions and existentials;
//   4. assert of implication consequents that are not yet hypotheses.
// A goal that repeats one of its ancestors (same context set, alpha-equal
// conclusion) is pruned.

#include <string_view>

#include "minilog/logic.h"
#include "minilog/tactics.h"

namespace minilog {

enum class LemmaPolicy { None, ImplicationConsequents };

struct SearchConfig {
  int max_depth = 12;
  long max_nodes = 100000;
  LemmaPolicy lemma_policy = LemmaPolicy::ImplicationConsequents;
};

struct SearchResult {
  enum class Status { Found, NotFound };
  enum class Reason { None, DepthExhausted, NodesExhausted };

  Status status = Status::NotFound;
  Reason reason = Reason::None;
  Script script;
  // Depth bound of the successful (or last) iteration.
  int depth = 0;
  // Tactic applications tried over all iterations.
  long nodes = 0;

  bool found() const { return status == Status::Found; }
};

std::string_view to_string(SearchResult::Reason reason);

// Throws Error(SyntaxError) on a non-positive bound.
SearchResult auto_search(const Sequent& goal, const SearchConfig& config = {});

}  // namespace minilog

#endif  // MINILOG_AUTOPROVE_H_
