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

#include "minilog/logic.h"

#include <algorithm>
#include <cassert>

#include "minilog/error.h"

namespace minilog {

namespace {

// Index of name counted from the innermost binder, or -1 if free.
int binder_depth(const std::vector<std::string>& env, const std::string& name) {
  for (int i = static_cast<int>(env.size()) - 1; i >= 0; --i)
    if (env[i] == name) return static_cast<int>(env.size()) - 1 - i;
  return -1;
}

void collect_free(const Term& t, VarSet& out) {
  if (t.is_var()) {
    out.insert(t.name());
    return;
  }
  for (const Term& a : t.args()) collect_free(a, out);
}

}  // namespace

// ---------------------------------------------------------------- Term

Term Term::var(std::string name) {
  return Term(std::make_shared<const Node>(Node{true, std::move(name), {}}));
}

Term Term::app(std::string function, std::vector<Term> args) {
  return Term(std::make_shared<const Node>(
      Node{false, std::move(function), std::move(args)}));
}

bool operator==(const Term& a, const Term& b) {
  if (a.node_ == b.node_) return true;
  if (a.is_var() != b.is_var() || a.name() != b.name()) return false;
  return std::ranges::equal(a.args(), b.args());
}

// ---------------------------------------------------------------- Formula

Formula Formula::atom(std::string predicate, std::vector<Term> args) {
  VarSet fv;
  for (const Term& t : args) collect_free(t, fv);
  return Formula(std::make_shared<const Node>(Node{
      Connective::Atom, std::move(predicate), std::move(args), {}, std::move(fv)}));
}

Formula Formula::imp(Formula antecedent, Formula consequent) {
  VarSet fv = antecedent.free_vars();
  fv.insert(consequent.free_vars().begin(), consequent.free_vars().end());
  return Formula(std::make_shared<const Node>(
      Node{Connective::Imp, {}, {}, {std::move(antecedent), std::move(consequent)}, std::move(fv)}));
}

Formula Formula::conj(Formula left, Formula right) {
  VarSet fv = left.free_vars();
  fv.insert(right.free_vars().begin(), right.free_vars().end());
  return Formula(std::make_shared<const Node>(
      Node{Connective::And, {}, {}, {std::move(left), std::move(right)}, std::move(fv)}));
}

Formula Formula::disj(Formula left, Formula right) {
  VarSet fv = left.free_vars();
  fv.insert(right.free_vars().begin(), right.free_vars().end());
  return Formula(std::make_shared<const Node>(
      Node{Connective::Or, {}, {}, {std::move(left), std::move(right)}, std::move(fv)}));
}

Formula Formula::forall(std::string var, Formula body) {
  VarSet fv = body.free_vars();
  fv.erase(var);
  return Formula(std::make_shared<const Node>(
      Node{Connective::Forall, std::move(var), {}, {std::move(body)}, std::move(fv)}));
}

Formula Formula::exists(std::string var, Formula body) {
  VarSet fv = body.free_vars();
  fv.erase(var);
  return Formula(std::make_shared<const Node>(
      Node{Connective::Exists, std::move(var), {}, {std::move(body)}, std::move(fv)}));
}

bool operator==(const Formula& a, const Formula& b) {
  if (a.node_ == b.node_) return true;
  if (a.connective() != b.connective()) return false;
  const auto& x = *a.node_;
  const auto& y = *b.node_;
  return x.symbol == y.symbol && x.args == y.args && x.children == y.children;
}

// ---------------------------------------------------------------- Sequent

Sequent Sequent::of(const std::vector<Formula>& context, Formula conclusion) {
  Sequent s{{}, std::move(conclusion)};
  for (size_t i = 0; i < context.size(); ++i)
    s.context.push_back({"H" + std::to_string(i + 1), context[i]});
  return s;
}

std::vector<Formula> Sequent::formulas() const {
  std::vector<Formula> out;
  out.reserve(context.size());
  for (const Hypothesis& h : context) out.push_back(h.formula);
  return out;
}

const Hypothesis* Sequent::find(std::string_view label) const {
  for (const Hypothesis& h : context)
    if (h.label == label) return &h;
  return nullptr;
}

bool Sequent::contains(const Formula& f) const {
  return std::ranges::any_of(context,
                             [&](const Hypothesis& h) { return alpha_eq(h.formula, f); });
}

// ---------------------------------------------------------------- free variables

VarSet free_vars(const Term& t) {
  VarSet out;
  collect_free(t, out);
  return out;
}

VarSet free_vars(const Formula& f) { return f.free_vars(); }

VarSet free_vars(std::span<const Formula> context) {
  VarSet out;
  for (const Formula& f : context) out.insert(f.free_vars().begin(), f.free_vars().end());
  return out;
}

VarSet free_vars(const Sequent& s) {
  VarSet out = s.conclusion.free_vars();
  for (const Hypothesis& h : s.context)
    out.insert(h.formula.free_vars().begin(), h.formula.free_vars().end());
  return out;
}

void collect_var_names(const Term& t, VarSet& out) {
  if (t.is_var()) {
    out.insert(t.name());
    return;
  }
  for (const Term& a : t.args()) collect_var_names(a, out);
}

void collect_var_names(const Formula& f, VarSet& out) {
  switch (f.connective()) {
    case Connective::Atom:
      for (const Term& t : f.args()) collect_var_names(t, out);
      return;
    case Connective::Forall:
    case Connective::Exists:
      out.insert(f.bound_var());
      collect_var_names(f.body(), out);
      return;
    default:
      collect_var_names(f.lhs(), out);
      collect_var_names(f.rhs(), out);
  }
}

// ---------------------------------------------------------------- substitution

Term substitute(const Term& t, const Substitution& subst) {
  if (t.is_var()) {
    auto it = subst.find(t.name());
    return it == subst.end() ? t : it->second;
  }
  std::vector<Term> args;
  args.reserve(t.args().size());
  for (const Term& a : t.args()) args.push_back(substitute(a, subst));
  return Term::app(t.name(), std::move(args));
}

Formula substitute(const Formula& f, const Substitution& subst) {
  Substitution active;
  for (const auto& [v, t] : subst)
    if (f.free_vars().contains(v)) active.emplace(v, t);
  if (active.empty()) return f;

  switch (f.connective()) {
    case Connective::Atom: {
      std::vector<Term> args;
      for (const Term& t : f.args()) args.push_back(substitute(t, active));
      return Formula::atom(f.predicate(), std::move(args));
    }
    case Connective::Imp:
      return Formula::imp(substitute(f.lhs(), active), substitute(f.rhs(), active));
    case Connective::And:
      return Formula::conj(substitute(f.lhs(), active), substitute(f.rhs(), active));
    case Connective::Or:
      return Formula::disj(substitute(f.lhs(), active), substitute(f.rhs(), active));
    case Connective::Forall:
    case Connective::Exists: {
      // The bound variable is never free in f, so it is not in `active`.
      std::string var = f.bound_var();
      VarSet range;
      for (const auto& [v, t] : active) collect_free(t, range);
      if (range.contains(var)) {
        VarSet avoid = f.body().free_vars();
        avoid.insert(range.begin(), range.end());
        for (const auto& [v, t] : active) avoid.insert(v);
        std::string renamed = fresh_var(var, avoid);
        active.insert_or_assign(var, Term::var(renamed));
        var = renamed;
      }
      Formula body = substitute(f.body(), active);
      return f.is_forall() ? Formula::forall(var, std::move(body))
                           : Formula::exists(var, std::move(body));
    }
  }
  return f;
}

Formula substitute(const Formula& f, const std::string& var, const Term& t) {
  return substitute(f, Substitution{{var, t}});
}

// ---------------------------------------------------------------- alpha-equivalence

namespace {

struct AlphaEnv {
  std::vector<std::string> left;
  std::vector<std::string> right;
};

bool term_alpha(const Term& a, const Term& b, const AlphaEnv& env) {
  if (a.is_var() || b.is_var()) {
    if (!a.is_var() || !b.is_var()) return false;
    int da = binder_depth(env.left, a.name());
    int db = binder_depth(env.right, b.name());
    if (da >= 0 || db >= 0) return da == db;
    return a.name() == b.name();
  }
  if (a.name() != b.name() || a.args().size() != b.args().size()) return false;
  for (size_t i = 0; i < a.args().size(); ++i)
    if (!term_alpha(a.args()[i], b.args()[i], env)) return false;
  return true;
}

bool formula_alpha(const Formula& f, const Formula& g, AlphaEnv& env) {
  if (f.connective() != g.connective()) return false;
  switch (f.connective()) {
    case Connective::Atom:
      if (f.predicate() != g.predicate() || f.args().size() != g.args().size()) return false;
      for (size_t i = 0; i < f.args().size(); ++i)
        if (!term_alpha(f.args()[i], g.args()[i], env)) return false;
      return true;
    case Connective::Forall:
    case Connective::Exists: {
      env.left.push_back(f.bound_var());
      env.right.push_back(g.bound_var());
      bool ok = formula_alpha(f.body(), g.body(), env);
      env.left.pop_back();
      env.right.pop_back();
      return ok;
    }
    default:
      return formula_alpha(f.lhs(), g.lhs(), env) && formula_alpha(f.rhs(), g.rhs(), env);
  }
}

void term_key(const Term& t, const std::vector<std::string>& env, std::string& out) {
  if (t.is_var()) {
    int d = binder_depth(env, t.name());
    if (d >= 0) {
      out += '#';
      out += std::to_string(d);
    } else {
      out += '$';
      out += t.name();
    }
    return;
  }
  out += t.name();
  out += '(';
  for (size_t i = 0; i < t.args().size(); ++i) {
    if (i) out += ',';
    term_key(t.args()[i], env, out);
  }
  out += ')';
}

void formula_key(const Formula& f, std::vector<std::string>& env, std::string& out) {
  switch (f.connective()) {
    case Connective::Atom:
      out += f.predicate();
      out += '(';
      for (size_t i = 0; i < f.args().size(); ++i) {
        if (i) out += ',';
        term_key(f.args()[i], env, out);
      }
      out += ')';
      return;
    case Connective::Forall:
    case Connective::Exists:
      out += f.is_forall() ? "A." : "E.";
      env.push_back(f.bound_var());
      formula_key(f.body(), env, out);
      env.pop_back();
      return;
    default:
      out += '[';
      formula_key(f.lhs(), env, out);
      out += f.is_imp() ? '>' : f.is_and() ? '&' : '|';
      formula_key(f.rhs(), env, out);
      out += ']';
  }
}

}  // namespace

bool alpha_eq(const Formula& f, const Formula& g) {
  if (f == g) return true;
  if (f.free_vars() != g.free_vars()) return false;
  AlphaEnv env;
  return formula_alpha(f, g, env);
}

std::string canonical_key(const Formula& f) {
  std::string out;
  std::vector<std::string> env;
  formula_key(f, env, out);
  return out;
}

std::string fresh_var(const std::string& base, const VarSet& avoid) {
  if (!avoid.contains(base)) return base;
  for (int i = 1;; ++i) {
    std::string candidate = base + std::to_string(i);
    if (!avoid.contains(candidate)) return candidate;
  }
}

bool contains_alpha(std::span<const Formula> set, const Formula& f) {
  return std::ranges::any_of(set, [&](const Formula& g) { return alpha_eq(f, g); });
}

bool same_formula_set(std::span<const Formula> a, std::span<const Formula> b) {
  std::set<std::string> ka, kb;
  for (const Formula& f : a) ka.insert(canonical_key(f));
  for (const Formula& f : b) kb.insert(canonical_key(f));
  return ka == kb;
}

// ---------------------------------------------------------------- matching

namespace {

class Matcher {
 public:
  explicit Matcher(const std::string& bound) : bound_(bound) {}

  bool formula(const Formula& p, const Formula& t) {
    if (p.connective() != t.connective()) return false;
    switch (p.connective()) {
      case Connective::Atom:
        if (p.predicate() != t.predicate() || p.args().size() != t.args().size()) return false;
        for (size_t i = 0; i < p.args().size(); ++i)
          if (!term(p.args()[i], t.args()[i])) return false;
        return true;
      case Connective::Forall:
      case Connective::Exists: {
        pattern_env_.push_back(p.bound_var());
        target_env_.push_back(t.bound_var());
        bool ok = formula(p.body(), t.body());
        pattern_env_.pop_back();
        target_env_.pop_back();
        return ok;
      }
      default:
        return formula(p.lhs(), t.lhs()) && formula(p.rhs(), t.rhs());
    }
  }

  const std::optional<Term>& found() const { return found_; }
  bool conflict() const { return conflict_; }

 private:
  bool term(const Term& p, const Term& t) {
    if (p.is_var()) {
      int dp = binder_depth(pattern_env_, p.name());
      if (dp < 0 && p.name() == bound_) {
        // The instance must not mention variables bound around this position.
        VarSet vs;
        collect_free(t, vs);
        for (const std::string& v : vs)
          if (binder_depth(target_env_, v) >= 0) return false;
        if (!found_)
          found_ = t;
        else if (!(*found_ == t))
          conflict_ = true;
        return true;
      }
      if (!t.is_var()) return false;
      int dt = binder_depth(target_env_, t.name());
      if (dp >= 0 || dt >= 0) return dp == dt;
      return p.name() == t.name();
    }
    if (t.is_var() || p.name() != t.name() || p.args().size() != t.args().size())
      return false;
    for (size_t i = 0; i < p.args().size(); ++i)
      if (!term(p.args()[i], t.args()[i])) return false;
    return true;
  }

  const std::string& bound_;
  std::vector<std::string> pattern_env_;
  std::vector<std::string> target_env_;
  std::optional<Term> found_;
  bool conflict_ = false;
};

}  // namespace

MatchResult match_against(const Formula& pattern, const std::string& bound,
                          const Formula& target) {
  Matcher m(bound);
  if (!m.formula(pattern, target)) return {};
  if (m.conflict())
    throw Error(ErrorCode::AmbiguousMatch,
                "variable '" + bound + "' must be instantiated with different terms");
  if (!m.found()) return {MatchResult::Kind::AnyTerm, std::nullopt};
  if (!alpha_eq(substitute(pattern, bound, *m.found()), target)) return {};
  return {MatchResult::Kind::Unique, m.found()};
}

// ---------------------------------------------------------------- term pool

namespace {

bool closed_under(const Term& t, const std::vector<std::string>& env) {
  VarSet vs;
  collect_free(t, vs);
  return std::ranges::none_of(vs, [&](const std::string& v) { return binder_depth(env, v) >= 0; });
}

void pool_term(const Term& t, const std::vector<std::string>& env, std::vector<Term>& out) {
  if (closed_under(t, env) && std::ranges::find(out, t) == out.end()) out.push_back(t);
  if (!t.is_var())
    for (const Term& a : t.args()) pool_term(a, env, out);
}

void pool_formula(const Formula& f, std::vector<std::string>& env, std::vector<Term>& out) {
  switch (f.connective()) {
    case Connective::Atom:
      for (const Term& t : f.args()) pool_term(t, env, out);
      return;
    case Connective::Forall:
    case Connective::Exists:
      env.push_back(f.bound_var());
      pool_formula(f.body(), env, out);
      env.pop_back();
      return;
    default:
      pool_formula(f.lhs(), env, out);
      pool_formula(f.rhs(), env, out);
  }
}

}  // namespace

std::vector<Term> closed_subterms(std::span<const Formula> formulas) {
  std::vector<Term> out;
  std::vector<std::string> env;
  for (const Formula& f : formulas) pool_formula(f, env, out);
  return out;
}

}  // namespace minilog
