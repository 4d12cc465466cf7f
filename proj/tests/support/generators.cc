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

#include "generators.h"

#include <algorithm>
#include <array>
#include <utility>

namespace minilog::testing {

namespace {

constexpr std::array<const char*, 4> kAtoms{"p", "q", "r", "s"};
constexpr std::array<const char*, 3> kVars{"x", "y", "z"};

template <class T>
const T& choose(Rng& rng, const std::vector<T>& items) {
  return items[static_cast<size_t>(pick(rng, 0, static_cast<int>(items.size()) - 1))];
}

bool coin(Rng& rng) { return pick(rng, 0, 1) == 1; }

}  // namespace

int pick(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

Term random_term(Rng& rng, int depth) {
  const int k = pick(rng, 0, depth > 0 ? 4 : 3);
  if (k < 3) return Term::var(kVars[static_cast<size_t>(k)]);
  if (k == 3) return Term::app("c");
  return Term::app("f", {random_term(rng, depth - 1)});
}

Formula random_formula(Rng& rng, const FormulaShape& shape) {
  auto atom = [&]() {
    if (shape.first_order && coin(rng)) {
      if (coin(rng)) return Formula::atom("P", {random_term(rng)});
      return Formula::atom("R", {random_term(rng), random_term(rng)});
    }
    return Formula::atom(kAtoms[static_cast<size_t>(pick(rng, 0, shape.atoms - 1))]);
  };
  if (shape.depth <= 0) return atom();
  FormulaShape sub = shape;
  sub.depth = shape.depth - 1;
  switch (pick(rng, 0, shape.first_order ? 6 : 4)) {
    case 0: return atom();
    case 1: return Formula::imp(random_formula(rng, sub), random_formula(rng, sub));
    case 2: return Formula::conj(random_formula(rng, sub), random_formula(rng, sub));
    case 3: return Formula::disj(random_formula(rng, sub), random_formula(rng, sub));
    case 4: {
      // Implication between atoms, frequent enough to make apply fire.
      sub.depth = 0;
      return Formula::imp(random_formula(rng, sub), random_formula(rng, sub));
    }
    case 5: return Formula::forall(kVars[static_cast<size_t>(pick(rng, 0, 2))], random_formula(rng, sub));
    default: return Formula::exists(kVars[static_cast<size_t>(pick(rng, 0, 2))], random_formula(rng, sub));
  }
}

// ---------------------------------------------------------------- scripts

namespace {

using Context = std::vector<Hypothesis>;

class ProofGen {
 public:
  ProofGen(Rng& rng, int atoms) : rng_(rng), atoms_(atoms) {}

  GeneratedProof run(int depth) {
    Context ctx;
    for (int i = pick(rng_, 0, 2); i > 0; --i) add_initial(formula(), ctx);
    auto [c, script] = gen(ctx, depth);
    return {{initial_, c}, std::move(script)};
  }

 private:
  Formula formula() { return random_formula(rng_, {atoms_, pick(rng_, 0, 2), false}); }

  std::string add_initial(const Formula& f, Context& ctx) {
    std::string label = "K" + std::to_string(initial_.size() + 1);
    initial_.push_back({label, f});
    ctx.push_back({label, f});
    return label;
  }

  static Script cat(Script a, const Script& b) {
    a.insert(a.end(), b.begin(), b.end());
    return a;
  }

  std::pair<Formula, Script> leaf(Context& ctx) {
    if (ctx.empty()) add_initial(formula(), ctx);
    const Hypothesis& h = choose(rng_, ctx);
    return {h.formula, {tactic::Trivial{}}};
  }

  // Existing hypothesis with the given connective, or a new theorem
  // hypothesis built with make.
  template <class Make>
  std::string hypothesis_of(Context& ctx, Connective kind, Make make) {
    std::vector<std::string> found;
    for (const Hypothesis& h : ctx)
      if (h.formula.connective() == kind) found.push_back(h.label);
    if (!found.empty() && coin(rng_)) return choose(rng_, found);
    return add_initial(make(), ctx);
  }

  static std::vector<Sequent> after(const Context& ctx, const Tactic& t) {
    return apply_tactic(GoalState(Sequent{ctx, Formula::atom("p")}), t).goals();
  }

  std::pair<Formula, Script> gen(Context ctx, int d) {
    if (d <= 0) return leaf(ctx);
    switch (pick(rng_, 0, 10)) {
      case 0:
        return leaf(ctx);
      case 1: {
        Formula a = formula();
        Context inner = ctx;
        inner.push_back({fresh_label(Sequent{ctx, a}), a});
        auto [b, s] = gen(inner, d - 1);
        return {Formula::imp(a, b), cat({tactic::Intro{}}, s)};
      }
      case 2: {
        auto [a, s1] = gen(ctx, d - 1);
        auto [b, s2] = gen(ctx, d - 1);
        return {Formula::conj(a, b), cat(cat({tactic::Split{}}, s1), s2)};
      }
      case 3:
      case 4: {
        auto [a, s] = gen(ctx, d - 1);
        Formula other = formula();
        const bool left = pick(rng_, 3, 4) == 3;
        return {left ? Formula::disj(a, other) : Formula::disj(other, a),
                cat({left ? Tactic{tactic::Left{}} : Tactic{tactic::Right{}}}, s)};
      }
      case 5: {
        auto [a, s] = gen(ctx, d - 1);
        Formula b = formula();
        std::string k = add_initial(Formula::imp(a, b), ctx);
        return {b, cat({tactic::Apply{k, std::nullopt}}, s)};
      }
      case 6: {
        std::string h = hypothesis_of(ctx, Connective::And,
                                      [&] { return Formula::conj(formula(), formula()); });
        Tactic t = tactic::Destruct{h};
        auto [c, s] = gen(after(ctx, t)[0].context, d - 1);
        return {c, cat({t}, s)};
      }
      case 7: {
        std::string h = hypothesis_of(ctx, Connective::Or,
                                      [&] { return Formula::disj(formula(), formula()); });
        const Formula f = std::ranges::find(ctx, h, &Hypothesis::label)->formula;
        Tactic t = tactic::Destruct{h};
        std::vector<Sequent> cases = after(ctx, t);
        if (coin(rng_)) {
          // Commuted disjunction: each case closes by the opposite side.
          return {Formula::disj(f.rhs(), f.lhs()),
                  {t, tactic::Right{}, tactic::Trivial{}, tactic::Left{}, tactic::Trivial{}}};
        }
        auto [c, s1] = gen(cases[0].context, d - 1);
        std::string k = add_initial(Formula::imp(f.rhs(), c), ctx);
        return {c, cat(cat({t}, s1), {tactic::Apply{k, std::nullopt}, tactic::Trivial{}})};
      }
      case 8:
      case 9: {
        auto [a, s1] = gen(ctx, d - 1);
        std::optional<std::string> as;
        std::string label = fresh_label(Sequent{ctx, a});
        if (coin(rng_)) {
          as = "A" + std::to_string(++named_);
          label = *as;
        }
        Context inner = ctx;
        inner.push_back({label, a});
        auto [c, s2] = gen(inner, d - 1);
        return {c, cat(cat({tactic::Assert{a, as}}, s1), s2)};
      }
      default: {
        auto [a, s2] = gen(ctx, d - 1);
        Context inner = ctx;
        inner.push_back({fresh_label(Sequent{ctx, a}), a});
        auto [c, s1] = gen(inner, d - 1);
        return {c, cat(cat({tactic::Cut{a}, tactic::Intro{}}, s1), s2)};
      }
    }
  }

  Rng& rng_;
  int atoms_;
  std::vector<Hypothesis> initial_;
  int named_ = 0;
};

}  // namespace

GeneratedProof random_proof(Rng& rng, int depth, int atoms) {
  return ProofGen(rng, atoms).run(depth);
}

// ---------------------------------------------------------------- derivations

namespace {

using Formulas = std::vector<Formula>;

Formulas with(Formulas v, const Formula& f) {
  v.push_back(f);
  return v;
}

class DerivationGen {
 public:
  DerivationGen(Rng& rng, const DerivationShape& shape) : rng_(rng), shape_(shape) {}

  Derivation run() {
    Formulas ctx;
    for (int i = pick(rng_, 0, 3); i > 0; --i) ctx.push_back(formula());
    gen(ctx, ctx, shape_.depth, {});
    return std::move(out_).finish();
  }

 private:
  Formula formula() {
    return random_formula(rng_, {shape_.atoms, pick(rng_, 0, 2), shape_.first_order});
  }

  const Formula& concl(int line) const { return out_.line(line).sequent.conclusion; }

  int add(const Formulas& ctx, const Formula& c, Rule rule, std::vector<int> premises = {},
          std::optional<Term> witness = std::nullopt) {
    return out_.add(Sequent::of(ctx, c), {rule, std::move(premises), std::move(witness)});
  }

  int hyp_from(const Formulas& ctx, const Formulas& usable) {
    if (usable.empty()) {
      Formula a = formula();
      int h = add(with(ctx, a), a, Rule::Hyp);
      return add(ctx, Formula::imp(a, a), Rule::ImpI, {h});
    }
    return add(ctx, choose(rng_, usable), Rule::Hyp);
  }

  // A usable hypothesis with the given connective, if any.
  std::optional<Formula> usable_of(const Formulas& usable, Connective kind) {
    std::vector<Formula> found;
    for (const Formula& f : usable)
      if (f.connective() == kind) found.push_back(f);
    if (found.empty() || !coin(rng_)) return std::nullopt;
    return choose(rng_, found);
  }

  VarSet blocked(const Formulas& ctx, const VarSet& avoid) const {
    VarSet v = free_vars(std::span<const Formula>(ctx));
    v.insert(avoid.begin(), avoid.end());
    return v;
  }

  int forall_intro(const Formulas& ctx, const Formulas& usable, int d, const VarSet& avoid) {
    int p = gen(ctx, usable, d, avoid);
    const Formula x = concl(p);
    const VarSet bad = blocked(ctx, avoid);
    std::vector<std::string> candidates;
    for (const std::string& v : x.free_vars())
      if (!bad.contains(v)) candidates.push_back(v);
    VarSet names = bad;
    collect_var_names(x, names);
    const std::string eigen =
        candidates.empty() ? fresh_var("w", names) : choose(rng_, candidates);
    std::string bound = kVars[static_cast<size_t>(pick(rng_, 0, 2))];
    if (bound != eigen && x.free_vars().contains(bound)) bound = eigen;
    Formula c = Formula::forall(bound, substitute(x, eigen, Term::var(bound)));
    return add(ctx, c, Rule::ForallI, {p}, Term::var(eigen));
  }

  int exists_intro(const Formulas& ctx, const Formulas& usable, int d, const VarSet& avoid) {
    int p = gen(ctx, usable, d, avoid);
    const Formula x = concl(p);
    VarSet names;
    collect_var_names(x, names);
    const std::string bound = fresh_var(kVars[static_cast<size_t>(pick(rng_, 0, 2))], names);
    if (!x.free_vars().empty() && coin(rng_)) {
      std::vector<std::string> fv(x.free_vars().begin(), x.free_vars().end());
      const std::string v = choose(rng_, fv);
      return add(ctx, Formula::exists(bound, substitute(x, v, Term::var(bound))), Rule::ExistsI,
                 {p}, Term::var(v));
    }
    return add(ctx, Formula::exists(bound, x), Rule::ExistsI, {p}, random_term(rng_));
  }

  int gen(const Formulas& ctx, const Formulas& usable, int d, const VarSet& avoid) {
    if (d <= 0) return hyp_from(ctx, usable);
    const int top = shape_.first_order ? 11 : 7;
    switch (pick(rng_, 0, top)) {
      case 0:
        return hyp_from(ctx, usable);
      case 1: {
        Formula a = formula();
        int p = gen(with(ctx, a), with(usable, a), d - 1, avoid);
        return add(ctx, Formula::imp(a, concl(p)), Rule::ImpI, {p});
      }
      case 2: {
        int arg = gen(ctx, usable, d - 1, avoid);
        const Formula a = concl(arg);
        int body = gen(with(ctx, a), with(usable, a), d - 1, avoid);
        const Formula b = concl(body);
        int imp = add(ctx, Formula::imp(a, b), Rule::ImpI, {body});
        std::vector<int> premises = coin(rng_) ? std::vector<int>{arg, imp} : std::vector<int>{imp, arg};
        return add(ctx, b, Rule::ImpE, premises);
      }
      case 3: {
        int l = gen(ctx, usable, d - 1, avoid);
        int r = gen(ctx, usable, d - 1, avoid);
        return add(ctx, Formula::conj(concl(l), concl(r)), Rule::AndI, {l, r});
      }
      case 4: {
        int p;
        if (auto f = usable_of(usable, Connective::And)) {
          p = add(ctx, *f, Rule::Hyp);
        } else {
          int l = gen(ctx, usable, d - 1, avoid);
          int r = gen(ctx, usable, d - 1, avoid);
          p = add(ctx, Formula::conj(concl(l), concl(r)), Rule::AndI, {l, r});
        }
        const Formula c = concl(p);
        return coin(rng_) ? add(ctx, c.lhs(), Rule::AndEL, {p}) : add(ctx, c.rhs(), Rule::AndER, {p});
      }
      case 5: {
        int p = gen(ctx, usable, d - 1, avoid);
        const Formula other = formula();
        return coin(rng_) ? add(ctx, Formula::disj(concl(p), other), Rule::OrIL, {p})
                          : add(ctx, Formula::disj(other, concl(p)), Rule::OrIR, {p});
      }
      case 6:
      case 7:
        return or_elim(ctx, usable, d, avoid);
      case 8:
        return forall_intro(ctx, usable, d - 1, avoid);
      case 9: {
        int q;
        if (auto f = usable_of(usable, Connective::Forall))
          q = add(ctx, *f, Rule::Hyp);
        else
          q = forall_intro(ctx, usable, d - 1, avoid);
        const Formula f = concl(q);
        const Term t = random_term(rng_);
        return add(ctx, substitute(f.body(), f.bound_var(), t), Rule::ForallE, {q}, t);
      }
      case 10:
        return exists_intro(ctx, usable, d - 1, avoid);
      default:
        return exists_elim(ctx, usable, d, avoid);
    }
  }

  int or_elim(const Formulas& ctx, const Formulas& usable, int d, const VarSet& avoid) {
    int dj;
    if (auto f = usable_of(usable, Connective::Or)) {
      dj = add(ctx, *f, Rule::Hyp);
    } else {
      int p = gen(ctx, usable, d - 1, avoid);
      const Formula other = formula();
      dj = coin(rng_) ? add(ctx, Formula::disj(concl(p), other), Rule::OrIL, {p})
                      : add(ctx, Formula::disj(other, concl(p)), Rule::OrIR, {p});
    }
    const Formula a = concl(dj).lhs();
    const Formula b = concl(dj).rhs();
    if (pick(rng_, 0, 2) == 0) {
      const Formula c = Formula::disj(b, a);
      int ha = add(with(ctx, a), a, Rule::Hyp);
      int la = add(with(ctx, a), c, Rule::OrIR, {ha});
      int hb = add(with(ctx, b), b, Rule::Hyp);
      int lb = add(with(ctx, b), c, Rule::OrIL, {hb});
      return add(ctx, c, Rule::OrE, {dj, la, lb});
    }
    // Both cases draw the same random choices from the shared usable set, so
    // they reach the same conclusion.
    VarSet inner = avoid;
    inner.insert(a.free_vars().begin(), a.free_vars().end());
    inner.insert(b.free_vars().begin(), b.free_vars().end());
    const Rng saved = rng_;
    int left = gen(with(ctx, a), usable, d - 1, inner);
    rng_ = saved;
    int right = gen(with(ctx, b), usable, d - 1, inner);
    if (!alpha_eq(concl(left), concl(right))) return dj;
    return add(ctx, concl(left), Rule::OrE, {dj, left, right});
  }

  int exists_elim(const Formulas& ctx, const Formulas& usable, int d, const VarSet& avoid) {
    int ex;
    if (auto f = usable_of(usable, Connective::Exists))
      ex = add(ctx, *f, Rule::Hyp);
    else
      ex = exists_intro(ctx, usable, d - 1, avoid);
    const Formula q = concl(ex);
    VarSet names = blocked(ctx, avoid);
    collect_var_names(q, names);
    const std::string eigen = fresh_var("y", names);
    const Formula body = substitute(q.body(), q.bound_var(), Term::var(eigen));
    VarSet inner = avoid;
    inner.insert(eigen);
    int case_line = gen(with(ctx, body), with(usable, body), d - 1, inner);
    const Formula c = concl(case_line);
    if (c.free_vars().contains(eigen)) return ex;
    return add(ctx, c, Rule::ExistsE, {ex, case_line}, Term::var(eigen));
  }

  Rng& rng_;
  DerivationShape shape_;
  DerivationBuilder out_;
};

}  // namespace

Derivation random_derivation(Rng& rng, const DerivationShape& shape) {
  return DerivationGen(rng, shape).run();
}

}  // namespace minilog::testing
