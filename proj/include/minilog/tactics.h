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

#ifndef MINILOG_TACTICS_H_
#define MINILOG_TACTICS_H_

// The transition system of tactics. A state is an ordered sequence of goals
// whose head is the current goal; every tactic rewrites the head only and the
// empty sequence is the single terminal state.

#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "minilog/error.h"
#include "minilog/logic.h"

namespace minilog {

namespace tactic {

struct Intro {};
struct Split {};
struct Left {};
struct Right {};
struct Exists {
  Term witness;
};
struct Apply {
  std::string label;
  std::optional<Term> with;
};
struct Destruct {
  std::string label;
};
struct Assert {
  Formula lemma;
  std::optional<std::string> as;
};
struct Cut {
  Formula lemma;
};
struct Trivial {};

}  // namespace tactic

using Tactic = std::variant<tactic::Intro, tactic::Split, tactic::Left, tactic::Right,
                            tactic::Exists, tactic::Apply, tactic::Destruct, tactic::Assert,
                            tactic::Cut, tactic::Trivial>;

using Script = std::vector<Tactic>;

// Heuristic group of a tactic as applied to a particular goal.
enum class TacticGroup { ConclusionAnalysis, PremiseAnalysis, LemmaAssertion, Discarding };

class GoalState {
 public:
  explicit GoalState(Sequent initial);
  explicit GoalState(std::vector<Sequent> goals);

  const std::vector<Sequent>& goals() const { return goals_; }
  bool terminal() const { return goals_.empty(); }
  bool has_history() const { return static_cast<bool>(last_); }
  // Tactics applied so far, oldest first.
  Script history() const;

  // Same goals and the same history chain.
  friend bool operator==(const GoalState& a, const GoalState& b);

 private:
  struct Step;
  friend GoalState apply_tactic(const GoalState& s, const Tactic& t);
  friend GoalState undo(const GoalState& s);

  std::vector<Sequent> goals_;
  std::shared_ptr<const Step> last_;
};

struct GoalState::Step {
  Tactic tactic;
  GoalState prior;
};

// One transition. Throws Error with TacticMismatch, UnknownLabel, NoMatch,
// AmbiguousMatch, NotTrivial, DuplicateLabel or TerminalState.
GoalState apply_tactic(const GoalState& s, const Tactic& t);

// Throws Error(EmptyHistory) on a state without history.
GoalState undo(const GoalState& s);

// Smallest unused label among H, H0, H1, ...
std::string fresh_label(const Sequent& goal);

// Eigenvariable that intro on a universal goal introduces.
std::string intro_eigenvariable(const Sequent& goal);
// Eigenvariable that destruct on the existential hypothesis `label` introduces.
std::string destruct_eigenvariable(const Sequent& goal, const std::string& label);

TacticGroup classify(const Tactic& t, const Sequent& goal);

struct ReplayResult {
  enum class Status { Complete, ScriptExhausted, TacticFailed };

  Status status = Status::Complete;
  // states[0] is the initial state; states[i] follows script step i.
  std::vector<GoalState> states;
  // On TacticFailed: 1-based index of the failing command and its error.
  int failed_step = 0;
  std::optional<Error> error;

  bool success() const { return status == Status::Complete; }
  const GoalState& final_state() const { return states.back(); }
};

// Folds apply_tactic over the script from the single goal `initial`.
ReplayResult replay(const Sequent& initial, const Script& script);

}  // namespace minilog

#endif  // MINILOG_TACTICS_H_
