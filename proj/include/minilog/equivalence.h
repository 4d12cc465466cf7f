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

#ifndef MINILOG_EQUIVALENCE_H_
#define MINILOG_EQUIVALENCE_H_

// Translations between derivations by tactics and natural-deduction
// derivations, in both directions.

#include <vector>

#include "minilog/kernel.h"
#include "minilog/logic.h"
#include "minilog/tactics.h"

namespace minilog {

struct TraceStep {
  Tactic tactic;
  // State after the tactic.
  GoalState state;
};

struct TacticTrace {
  Sequent initial;
  std::vector<TraceStep> steps;
};

// Records the states of a replay. Throws Error(MalformedTrace) when the
// replay does not reach the empty goal sequence, carrying the failing step.
TacticTrace make_trace(const Sequent& initial, const Script& script);
TacticTrace make_trace(const ReplayResult& result);

// Compiles a trace ending in the empty goal sequence into a derivation of the
// initial sequent with no assumed judgments. The proof tree is recovered from
// the goal counts of consecutive states. Throws Error(MalformedTrace) when the
// recorded states disagree with a fresh replay.
Derivation tactics_to_derivation(const TacticTrace& trace);

// Script that replays the final judgment of d to the empty goal sequence.
// Eliminations go through assert. Requires an accepted derivation without
// assumed judgments; throws Error(InvalidDerivation) on an Assumed line.
Script derivation_to_tactics(const Derivation& d);

}  // namespace minilog

#endif  // MINILOG_EQUIVALENCE_H_
