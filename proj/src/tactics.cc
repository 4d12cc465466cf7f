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

#include "minilog/tactics.h"

#include <algorithm>

#include "minilog/textio.h"

namespace minilog {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};

bool same_sequent(const Sequent& a, const Sequent& b) {
  if (!(a.conclusion == b.conclusion) || a.context.size() != b.context.size()) return false;
  for (size_t i = 0; i < a.context.size(); ++i)
    if (a.context[i].label != b.context[i].label ||
        !(a.context[i].formula == b.context[i].formula))
      return false;
  return true;
}

const Hypothesis& lookup(const Sequent& g, const std::string& label) {
  if (const Hypothesis* h = g.find(label)) return *h;
  throw Error(ErrorCode::UnknownLabel, "no hypothesis named '" + label + "'");
}

Error mismatch(const std::string& tactic, const std::string& why) {
  return Error(ErrorCode::TacticMismatch, tactic + ": " + why);
}

Sequent replace_hypothesis(const Sequent& g, const std::string& label,
                           std::vector<Formula> replacements) {
  // The first replacement keeps the label, later ones get fresh labels.
  Sequent taken = g;
  std::vector<Hypothesis> added{{label, replacements[0]}};
  for (size_t i = 1; i < replacements.size(); ++i) {
    added.push_back({fresh_label(taken), replacements[i]});
    taken.context.push_back(added.back());
  }
  Sequent out{{}, g.conclusion};
  for (const Hypothesis& h : g.context) {
    if (h.label == label)
      out.context.insert(out.context.end(), added.begin(), added.end());
    else
      out.context.push_back(h);
  }
  return out;
}

std::vector<Sequent> step(const Sequent& g, const Tactic& t) {
  const Formula& c = g.conclusion;
  return std::visit(
      overloaded{
          [&](const tactic::Intro&) -> std::vector<Sequent> {
            if (c.is_imp()) {
              Sequent next = g;
              next.context.push_back({fresh_label(g), c.lhs()});
              next.conclusion = c.rhs();
              return {next};
            }
            if (c.is_forall()) {
              std::string var = intro_eigenvariable(g);
              return {{g.context, substitute(c.body(), c.bound_var(), Term::var(var))}};
            }
            throw mismatch("intro", "goal is neither an implication nor universal");
          },
          [&](const tactic::Split&) -> std::vector<Sequent> {
            if (!c.is_and()) throw mismatch("split", "goal is not a conjunction");
            return {{g.context, c.lhs()}, {g.context, c.rhs()}};
          },
          [&](const tactic::Left&) -> std::vector<Sequent> {
            if (!c.is_or()) throw mismatch("left", "goal is not a disjunction");
            return {{g.context, c.lhs()}};
          },
          [&](const tactic::Right&) -> std::vector<Sequent> {
            if (!c.is_or()) throw mismatch("right", "goal is not a disjunction");
            return {{g.context, c.rhs()}};
          },
          [&](const tactic::Exists& e) -> std::vector<Sequent> {
            if (!c.is_exists()) throw mismatch("exists", "goal is not existential");
            return {{g.context, substitute(c.body(), c.bound_var(), e.witness)}};
          },
          [&](const tactic::Apply& a) -> std::vector<Sequent> {
            const Formula& h = lookup(g, a.label).formula;
            if (h.is_imp()) {
              if (a.with) throw mismatch("apply", "'with' needs a universal hypothesis");
              if (!alpha_eq(h.rhs(), c))
                throw mismatch("apply", "goal does not match the consequent of " + a.label);
              return {{g.context, h.lhs()}};
            }
            if (h.is_forall()) {
              if (a.with) {
                if (!alpha_eq(substitute(h.body(), h.bound_var(), *a.with), c))
                  throw Error(ErrorCode::NoMatch, "apply: instance of " + a.label +
                                                      " at " + render_term(*a.with) +
                                                      " is not the goal");
                return {};
              }
              if (!match_against(h.body(), h.bound_var(), c))
                throw Error(ErrorCode::NoMatch,
                            "apply: goal is not an instance of " + a.label);
              return {};
            }
            throw mismatch("apply", a.label + " is neither an implication nor universal");
          },
          [&](const tactic::Destruct& d) -> std::vector<Sequent> {
            const Formula& h = lookup(g, d.label).formula;
            if (h.is_and()) return {replace_hypothesis(g, d.label, {h.lhs(), h.rhs()})};
            if (h.is_or())
              return {replace_hypothesis(g, d.label, {h.lhs()}),
                      replace_hypothesis(g, d.label, {h.rhs()})};
            if (h.is_exists()) {
              std::string var = destruct_eigenvariable(g, d.label);
              return {replace_hypothesis(
                  g, d.label, {substitute(h.body(), h.bound_var(), Term::var(var))})};
            }
            throw mismatch("destruct", d.label + " is not a conjunction, disjunction or existential");
          },
          [&](const tactic::Assert& a) -> std::vector<Sequent> {
            std::string label = a.as ? *a.as : fresh_label(g);
            if (g.find(label))
              throw Error(ErrorCode::DuplicateLabel, "assert: label '" + label + "' is in use");
            Sequent with_lemma = g;
            with_lemma.context.push_back({label, a.lemma});
            return {{g.context, a.lemma}, with_lemma};
          },
          [&](const tactic::Cut& k) -> std::vector<Sequent> {
            return {{g.context, Formula::imp(k.lemma, c)}, {g.context, k.lemma}};
          },
          [&](const tactic::Trivial&) -> std::vector<Sequent> {
            if (!g.contains(c))
              throw Error(ErrorCode::NotTrivial, "trivial: goal is not a hypothesis");
            return {};
          },
      },
      t);
}

}  // namespace

GoalState::GoalState(Sequent initial) { goals_.push_back(std::move(initial)); }

GoalState::GoalState(std::vector<Sequent> goals) : goals_(std::move(goals)) {}

Script GoalState::history() const {
  Script out;
  for (const Step* s = last_.get(); s; s = s->prior.last_.get()) out.push_back(s->tactic);
  std::ranges::reverse(out);
  return out;
}

bool operator==(const GoalState& a, const GoalState& b) {
  return a.last_ == b.last_ &&
         std::ranges::equal(a.goals_, b.goals_, same_sequent);
}

GoalState apply_tactic(const GoalState& s, const Tactic& t) {
  if (s.terminal()) throw Error(ErrorCode::TerminalState, "no goals left");
  std::vector<Sequent> goals = step(s.goals_.front(), t);
  goals.insert(goals.end(), s.goals_.begin() + 1, s.goals_.end());
  GoalState next(std::move(goals));
  next.last_ = std::make_shared<const GoalState::Step>(GoalState::Step{t, s});
  return next;
}

GoalState undo(const GoalState& s) {
  if (!s.last_) throw Error(ErrorCode::EmptyHistory, "nothing to undo");
  return s.last_->prior;
}

std::string fresh_label(const Sequent& goal) {
  if (!goal.find("H")) return "H";
  for (int i = 0;; ++i) {
    std::string label = "H" + std::to_string(i);
    if (!goal.find(label)) return label;
  }
}

std::string intro_eigenvariable(const Sequent& goal) {
  const Formula& c = goal.conclusion;
  VarSet ctx = free_vars(std::span<const Formula>(goal.formulas()));
  if (!ctx.contains(c.bound_var())) return c.bound_var();
  ctx.insert(c.body().free_vars().begin(), c.body().free_vars().end());
  return fresh_var(c.bound_var(), ctx);
}

std::string destruct_eigenvariable(const Sequent& goal, const std::string& label) {
  const Formula& h = lookup(goal, label).formula;
  VarSet avoid = goal.conclusion.free_vars();
  for (const Hypothesis& other : goal.context)
    if (other.label != label)
      avoid.insert(other.formula.free_vars().begin(), other.formula.free_vars().end());
  if (!avoid.contains(h.bound_var())) return h.bound_var();
  avoid.insert(h.body().free_vars().begin(), h.body().free_vars().end());
  return fresh_var(h.bound_var(), avoid);
}

TacticGroup classify(const Tactic& t, const Sequent& goal) {
  return std::visit(
      overloaded{
          [](const tactic::Trivial&) { return TacticGroup::Discarding; },
          [&](const tactic::Apply& a) {
            const Hypothesis* h = goal.find(a.label);
            return h && h->formula.is_forall() ? TacticGroup::Discarding
                                               : TacticGroup::PremiseAnalysis;
          },
          [](const tactic::Destruct&) { return TacticGroup::PremiseAnalysis; },
          [](const tactic::Assert&) { return TacticGroup::LemmaAssertion; },
          [](const tactic::Cut&) { return TacticGroup::LemmaAssertion; },
          [](const auto&) { return TacticGroup::ConclusionAnalysis; },
      },
      t);
}

ReplayResult replay(const Sequent& initial, const Script& script) {
  ReplayResult r;
  r.states.emplace_back(initial);
  for (size_t i = 0; i < script.size(); ++i) {
    try {
      r.states.push_back(apply_tactic(r.states.back(), script[i]));
    } catch (const Error& e) {
      r.status = ReplayResult::Status::TacticFailed;
      r.failed_step = static_cast<int>(i) + 1;
      r.error = e;
      return r;
    }
  }
  if (!r.final_state().terminal()) r.status = ReplayResult::Status::ScriptExhausted;
  return r;
}

}  // namespace minilog
