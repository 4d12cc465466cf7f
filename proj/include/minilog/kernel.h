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

#ifndef MINILOG_KERNEL_H_
#define MINILOG_KERNEL_H_

// Linear natural-deduction derivations with localized hypotheses and the
// checker that validates them line by line.
//
// A derivation is a sequence of judgments; each line is a (Hyp) instance, a
// member of the assumed set, or the conclusion of a rule whose premises are
// earlier lines. Contexts are compared as sets of formulas up to
// alpha-equivalence.

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "minilog/logic.h"

namespace minilog {

enum class Rule {
  Hyp,
  ImpI,
  ImpE,
  AndI,
  AndEL,
  AndER,
  OrIL,
  OrIR,
  OrE,
  ForallI,
  ForallE,
  ExistsI,
  ExistsE,
  Assumed,
};

std::string_view to_string(Rule rule);
std::optional<Rule> rule_from_string(std::string_view name);
size_t rule_arity(Rule rule);

struct Justification {
  Rule rule = Rule::Hyp;
  // 1-based line numbers, each smaller than the line carrying them.
  //   ImpE:    antecedent, implication (either order is accepted)
  //   AndI:    left, right
  //   OrE:     disjunction, left case, right case
  //   ExistsE: existential, body case
  std::vector<int> premises;
  // Instance term for ForallE/ExistsI; eigenvariable (a Var) for
  // ForallI/ExistsE, defaulting to the quantifier's bound variable.
  std::optional<Term> witness;
};

struct DerivationLine {
  Sequent sequent;
  Justification justification;
};

struct Derivation {
  std::vector<DerivationLine> lines;
  std::vector<Sequent> assumed;

  // The derived judgment (last line). Requires a non-empty derivation.
  const Sequent& conclusion() const { return lines.back().sequent; }
};

enum class RejectReason {
  None,
  BadHyp,
  BadPremiseShape,
  EigenvariableCaptured,
  WitnessMismatch,
  ContextMismatch,
};

std::string_view to_string(RejectReason reason);

struct CheckResult {
  // 1-based line of the first failure, 0 when accepted.
  int line = 0;
  RejectReason reason = RejectReason::None;
  std::string message;

  bool accepted() const { return reason == RejectReason::None; }
};

CheckResult check_derivation(const Derivation& d);

// Set-semantics judgment equality: contexts equal as formula sets and
// conclusions alpha-equal.
bool check_judgment_equal(const Sequent& a, const Sequent& b);

// Adds `extra` to every context of the cone of the last line. Eigenvariables
// that occur free in `extra` are renamed first. Assumed lines become assumed
// judgments of the result (with the extra formulas added).
Derivation weaken(const Derivation& d, const std::vector<Formula>& extra);

// Applies `subst` to every line of the cone of the last line and adds
// `extra` to the contexts, renaming eigenvariables that would clash. The
// result derives Gamma[subst], extra |- A[subst].
Derivation instantiate(const Derivation& d, const Substitution& subst,
                       const std::vector<Formula>& extra);

// Substitution property: from a derivation of Gamma, lemma |- C and one of
// Gamma |- lemma, builds a derivation of Gamma |- C. Throws
// Error(ContextMismatch) when minor does not conclude lemma or the major
// context is not Gamma plus lemma.
Derivation graft(const Derivation& major, const Derivation& minor, const Formula& lemma);

// Appends derivations while renumbering premises. Lines are 1-based.
class DerivationBuilder {
 public:
  int add(Sequent sequent, Justification justification);
  // Copies all lines of d; returns the new number of d's last line.
  int append(const Derivation& d);
  void assume(const Sequent& s);
  const DerivationLine& line(int n) const { return out_.lines[n - 1]; }
  int size() const { return static_cast<int>(out_.lines.size()); }
  Derivation finish() &&;

 private:
  Derivation out_;
};

}  // namespace minilog

#endif  // MINILOG_KERNEL_H_
