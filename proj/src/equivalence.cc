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

#include "minilog/equivalence.h"

#include <algorithm>

#include "minilog/error.h"
#include "minilog/textio.h"

namespace minilog {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};

bool same_goals(const std::vector<Sequent>& a, const std::vector<Sequent>& b) {
  auto same = [](const Sequent& x, const Sequent& y) {
    if (!(x.conclusion == y.conclusion) || x.context.size() != y.context.size()) return false;
    for (size_t i = 0; i < x.context.size(); ++i)
      if (x.context[i].label != y.context[i].label ||
          !(x.context[i].formula == y.context[i].formula))
        return false;
    return true;
  };
  return std::ranges::equal(a, b, same);
}

// Formulas of `ctx` with every alpha-variant of f removed.
std::vector<Formula> without(const std::vector<Formula>& ctx, const Formula& f) {
  std::vector<Formula> out;
  for (const Formula& g : ctx)
    if (!alpha_eq(g, f)) out.push_back(g);
  return out;
}

// Single-line derivation of ctx |- f by (Hyp).
Derivation hyp(const std::vector<Formula>& ctx, const Formula& f) {
  DerivationBuilder b;
  b.add(Sequent::of(ctx, f), {Rule::Hyp, {}, std::nullopt});
  return std::move(b).finish();
}

// Weakens d so that its final context is exactly the set `ctx`, which must
// include it.
Derivation fit(const Derivation& d, const std::vector<Formula>& ctx) {
  const std::vector<Formula> have = d.conclusion().formulas();
  std::vector<Formula> extra;
  for (const Formula& f : ctx)
    if (!contains_alpha(have, f) && !contains_alpha(extra, f)) extra.push_back(f);
  return extra.empty() ? d : weaken(d, extra);
}

// ---------------------------------------------------------------- soundness

class Compiler {
 public:
  Compiler(const std::vector<GoalState>& states, const Script& script)
      : states_(states), script_(script) {}

  Derivation run() {
    Derivation d = prove();
    if (pos_ != script_.size())
      throw Error(ErrorCode::MalformedTrace, "trace continues after the proof is complete");
    return d;
  }

 private:
  Derivation prove() {
    if (pos_ >= script_.size())
      throw Error(ErrorCode::MalformedTrace, "trace ends with open goals");
    const size_t at = pos_++;
    const Sequent& g = states_[at].goals().front();
    const Tactic& t = script_[at];
    const size_t k = states_[at + 1].goals().size() + 1 - states_[at].goals().size();
    std::vector<Derivation> subs;
    for (size_t i = 0; i < k; ++i) subs.push_back(prove());
    return combine(g, t, subs);
  }

  static Derivation combine(const Sequent& g, const Tactic& t, std::vector<Derivation>& subs) {
    const std::vector<Formula> ctx = g.formulas();
    const Formula& c = g.conclusion;
    DerivationBuilder b;
    auto finish_with = [&](Rule rule, std::vector<int> premises,
                           std::optional<Term> witness = std::nullopt) {
      b.add(Sequent::of(ctx, c), {rule, std::move(premises), std::move(witness)});
      return std::move(b).finish();
    };
    return std::visit(
        overloaded{
            [&](const tactic::Trivial&) { return hyp(ctx, c); },
            [&](const tactic::Intro&) {
              int p = b.append(subs[0]);
              if (c.is_imp()) return finish_with(Rule::ImpI, {p});
              return finish_with(Rule::ForallI, {p}, Term::var(intro_eigenvariable(g)));
            },
            [&](const tactic::Split&) {
              int l = b.append(subs[0]);
              int r = b.append(subs[1]);
              return finish_with(Rule::AndI, {l, r});
            },
            [&](const tactic::Left&) { return finish_with(Rule::OrIL, {b.append(subs[0])}); },
            [&](const tactic::Right&) { return finish_with(Rule::OrIR, {b.append(subs[0])}); },
            [&](const tactic::Exists& e) {
              return finish_with(Rule::ExistsI, {b.append(subs[0])}, e.witness);
            },
            [&](const tactic::Apply& a) {
              const Formula& h = g.find(a.label)->formula;
              int major = b.append(hyp(ctx, h));
              if (h.is_imp()) {
                int minor = b.append(subs[0]);
                return finish_with(Rule::ImpE, {minor, major});
              }
              Term witness = Term::var(h.bound_var());
              if (a.with) {
                witness = *a.with;
              } else if (MatchResult m = match_against(h.body(), h.bound_var(), c);
                         m.kind == MatchResult::Kind::Unique) {
                witness = *m.term;
              }
              return finish_with(Rule::ForallE, {major}, witness);
            },
            [&](const tactic::Destruct& d) { return destruct(g, d, subs); },
            [&](const tactic::Assert& a) { return graft(subs[1], subs[0], a.lemma); },
            [&](const tactic::Cut&) {
              int imp = b.append(subs[0]);
              int arg = b.append(subs[1]);
              return finish_with(Rule::ImpE, {arg, imp});
            },
        },
        t);
  }

  static Derivation destruct(const Sequent& g, const tactic::Destruct& d,
                             std::vector<Derivation>& subs) {
    const std::vector<Formula> ctx = g.formulas();
    const Formula& c = g.conclusion;
    const Formula& h = g.find(d.label)->formula;
    DerivationBuilder b;

    if (h.is_and()) {
      // Gamma', A, B |- C, weakened by A /\ B, then A and B grafted away.
      Derivation major = weaken(subs[0], {h});
      for (auto [part, rule] : {std::pair{h.lhs(), Rule::AndEL}, std::pair{h.rhs(), Rule::AndER}}) {
        if (!contains_alpha(major.conclusion().formulas(), part)) continue;
        std::vector<Formula> rest = without(major.conclusion().formulas(), part);
        DerivationBuilder minor;
        int p = minor.add(Sequent::of(rest, h), {Rule::Hyp, {}, std::nullopt});
        minor.add(Sequent::of(rest, part), {rule, {p}, std::nullopt});
        major = graft(major, std::move(minor).finish(), part);
      }
      return fit(major, ctx);
    }

    int major = b.add(Sequent::of(ctx, h), {Rule::Hyp, {}, std::nullopt});
    if (h.is_or()) {
      int left = b.append(weaken(subs[0], {h}));
      int right = b.append(weaken(subs[1], {h}));
      b.add(Sequent::of(ctx, c), {Rule::OrE, {major, left, right}, std::nullopt});
      return std::move(b).finish();
    }
    // Existential: the subgoal's new hypothesis is the body at the eigenvariable.
    const std::string eigen = destruct_eigenvariable(g, d.label);
    int body = b.append(weaken(subs[0], {h}));
    b.add(Sequent::of(ctx, c), {Rule::ExistsE, {major, body}, Term::var(eigen)});
    return std::move(b).finish();
  }

  const std::vector<GoalState>& states_;
  const Script& script_;
  size_t pos_ = 0;
};

// ---------------------------------------------------------------- completeness

// The prefix of d ending at line n; its last line is n.
Derivation upto(const Derivation& d, int n) {
  Derivation out;
  out.lines.assign(d.lines.begin(), d.lines.begin() + n);
  out.assumed = d.assumed;
  return out;
}

class Simulator {
 public:
  explicit Simulator(const Sequent& goal) : state_(goal) {}

  Script run(const Derivation& d) && {
    prove(d);
    return state_.history();
  }

 private:
  const Sequent& head() const { return state_.goals().front(); }

  void step(Tactic t) { state_ = apply_tactic(state_, std::move(t)); }

  // Asserts f under an automatic label and returns that label.
  std::string assert_lemma(const Formula& f) {
    std::string label = fresh_label(head());
    step(tactic::Assert{f, std::nullopt});
    return label;
  }

  // Discharges the head goal, whose context includes that of d's last line
  // and whose conclusion is alpha-equal to it.
  void prove(const Derivation& d) {
    const DerivationLine& line = d.lines.back();
    const Justification& j = line.justification;
    const Formula& c = line.sequent.conclusion;
    auto premise = [&](size_t i) { return upto(d, j.premises[i]); };
    auto concl = [&](size_t i) -> const Formula& {
      return d.lines[j.premises[i] - 1].sequent.conclusion;
    };

    switch (j.rule) {
      case Rule::Hyp:
        step(tactic::Trivial{});
        return;
      case Rule::Assumed:
        throw Error(ErrorCode::InvalidDerivation, "assumed judgments cannot be simulated");
      case Rule::ImpI:
        step(tactic::Intro{});
        prove(premise(0));
        return;
      case Rule::AndI:
        step(tactic::Split{});
        prove(premise(0));
        prove(premise(1));
        return;
      case Rule::OrIL:
        step(tactic::Left{});
        prove(premise(0));
        return;
      case Rule::OrIR:
        step(tactic::Right{});
        prove(premise(0));
        return;
      case Rule::ExistsI:
        step(tactic::Exists{j.witness ? *j.witness : Term::var(c.bound_var())});
        prove(premise(0));
        return;
      case Rule::ForallI: {
        const std::string eigen = j.witness ? j.witness->name() : c.bound_var();
        const std::string fresh = intro_eigenvariable(head());
        step(tactic::Intro{});
        prove(rename(premise(0), eigen, fresh));
        return;
      }
      case Rule::ImpE: {
        const bool major_first = concl(0).is_imp() && alpha_eq(concl(0).rhs(), c) &&
                                 alpha_eq(concl(0).lhs(), concl(1));
        const size_t major = major_first ? 0 : 1;
        std::string label = assert_lemma(concl(major));
        prove(premise(major));
        step(tactic::Apply{label, std::nullopt});
        prove(premise(1 - major));
        return;
      }
      case Rule::AndEL:
      case Rule::AndER: {
        std::string label = assert_lemma(concl(0));
        prove(premise(0));
        step(tactic::Destruct{label});
        step(tactic::Trivial{});
        return;
      }
      case Rule::OrE: {
        std::string label = assert_lemma(concl(0));
        prove(premise(0));
        step(tactic::Destruct{label});
        prove(premise(1));
        prove(premise(2));
        return;
      }
      case Rule::ForallE: {
        std::string label = assert_lemma(concl(0));
        prove(premise(0));
        step(tactic::Apply{label, j.witness ? *j.witness : Term::var(concl(0).bound_var())});
        return;
      }
      case Rule::ExistsE: {
        const Formula& q = concl(0);
        const std::string eigen = j.witness ? j.witness->name() : q.bound_var();
        std::string label = assert_lemma(q);
        prove(premise(0));
        const std::string fresh = destruct_eigenvariable(head(), label);
        step(tactic::Destruct{label});
        prove(rename(premise(1), eigen, fresh));
        return;
      }
    }
  }

  static Derivation rename(const Derivation& d, const std::string& from, const std::string& to) {
    if (from == to) return d;
    return instantiate(d, {{from, Term::var(to)}}, {});
  }

  GoalState state_;
};

}  // namespace

TacticTrace make_trace(const ReplayResult& result) {
  if (result.status == ReplayResult::Status::TacticFailed)
    throw Error(ErrorCode::MalformedTrace,
                "step " + std::to_string(result.failed_step) + " failed: " + result.error->what());
  if (!result.success())
    throw Error(ErrorCode::MalformedTrace, "replay ends with open goals");
  const GoalState& initial = result.states.front();
  TacticTrace trace{initial.goals().front(), {}};
  const Script script = result.final_state().history();
  for (size_t i = 0; i < script.size(); ++i) trace.steps.push_back({script[i], result.states[i + 1]});
  return trace;
}

TacticTrace make_trace(const Sequent& initial, const Script& script) {
  return make_trace(replay(initial, script));
}

Derivation tactics_to_derivation(const TacticTrace& trace) {
  Script script;
  for (const TraceStep& s : trace.steps) script.push_back(s.tactic);
  ReplayResult r = replay(trace.initial, script);
  if (r.status == ReplayResult::Status::TacticFailed)
    throw Error(ErrorCode::MalformedTrace, "step " + std::to_string(r.failed_step) +
                                               " does not replay: " + r.error->what());
  for (size_t i = 0; i < trace.steps.size(); ++i)
    if (!same_goals(trace.steps[i].state.goals(), r.states[i + 1].goals()))
      throw Error(ErrorCode::MalformedTrace,
                  "recorded state after step " + std::to_string(i + 1) + " differs from replay");
  if (!r.success()) throw Error(ErrorCode::MalformedTrace, "trace ends with open goals");
  return Compiler(r.states, script).run();
}

Script derivation_to_tactics(const Derivation& d) {
  if (d.lines.empty()) throw Error(ErrorCode::InvalidDerivation, "empty derivation");
  return Simulator(d.conclusion()).run(d);
}

}  // namespace minilog
