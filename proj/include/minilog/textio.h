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

#ifndef MINILOG_TEXTIO_H_
#define MINILOG_TEXTIO_H_

// Concrete ASCII syntax for formulas, theorem files, tactic scripts and
// derivation files.
//
//   formula := imp
//   imp     := or ("->" imp)?
//   or      := and ("\/" and)*
//   and     := qf ("/\" qf)*
//   qf      := atom | "(" formula ")" | ("forall" | "exists") ident "." imp
//   atom    := ident ("(" term ("," term)* ")")?
//   term    := ident ("(" term ("," term)* ")")?
//
// A bare identifier in term position is a variable; "c()" is a constant.
// "--" starts a comment that runs to the end of the line.

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "minilog/kernel.h"
#include "minilog/logic.h"
#include "minilog/tactics.h"

namespace minilog {

// Arity of every predicate and function symbol seen so far. Sharing one
// table across several parses enforces consistency within a problem.
struct SymbolTable {
  std::map<std::string, size_t> predicates;
  std::map<std::string, size_t> functions;
};

Formula parse_formula(std::string_view text);
Formula parse_formula(std::string_view text, SymbolTable& symbols);
Term parse_term(std::string_view text);

std::string render_formula(const Formula& f);
std::string render_term(const Term& t);
// "A, B |- C", or "H1: A, H2: B |- C" with labels.
std::string render_sequent(const Sequent& s, bool with_labels = false);
// Goals separated by " ; ", "[]" for the empty sequence.
std::string render_goals(const std::vector<Sequent>& goals, bool with_labels = false);

// `hyp <label> : <formula>` lines followed by `theorem <name> : <formula>`.
struct TheoremFile {
  std::vector<Hypothesis> hypotheses;
  std::string name;
  Formula goal;

  Sequent sequent() const { return {hypotheses, goal}; }
};

TheoremFile parse_theorem(std::string_view text, SymbolTable* symbols = nullptr);
std::string render_theorem(const TheoremFile& theorem);

// Period-terminated tactic commands.
Script parse_script(std::string_view text, SymbolTable* symbols = nullptr);
std::string render_tactic(const Tactic& t);
// One command per line.
std::string render_script(const Script& script);

struct ContextAlias {
  std::string name;
  std::vector<Formula> formulas;
};

// Preamble lines `context <Name> := f1, ..., fn` and `assume <ctx> |- <f>`,
// then one line per judgment:
//   <index> | <ctx> |- <formula> | <Rule> [<premise>,...] [<witness>]
// A context item that is exactly an alias name expands to its formulas.
// A document starting with '{' is read as the equivalent JSON form.
struct DerivationFile {
  std::vector<ContextAlias> aliases;
  Derivation derivation;
};

DerivationFile parse_derivation(std::string_view text);
std::string render_derivation(const DerivationFile& file);
std::string render_derivation(const Derivation& d);
std::string render_derivation_json(const DerivationFile& file);

// Numbered rows of goal sequences with the tactic that produced each row.
std::string render_trace(const ReplayResult& result);

}  // namespace minilog

#endif  // MINILOG_TEXTIO_H_
