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

#ifndef MINILOG_LOGIC_H_
#define MINILOG_LOGIC_H_

// Terms, formulas and sequents of minimal first-order logic.
//
// There is no falsum and no negation: the connectives are ->, /\, \/ and the
// quantifiers forall/exists. Values are immutable and share structure through
// reference-counted nodes, so copying a Formula is cheap and safe across
// threads.

#include <map>
#include <memory>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <vector>

namespace minilog {

using VarSet = std::set<std::string>;

class Term {
 public:
  static Term var(std::string name);
  // Constants are zero-arity applications.
  static Term app(std::string function, std::vector<Term> args = {});

  bool is_var() const { return node_->is_var; }
  // Variable name or function symbol.
  const std::string& name() const { return node_->name; }
  std::span<const Term> args() const { return node_->args; }

  friend bool operator==(const Term& a, const Term& b);

 private:
  struct Node {
    bool is_var;
    std::string name;
    std::vector<Term> args;
  };
  explicit Term(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

enum class Connective { Atom, Imp, And, Or, Forall, Exists };

class Formula {
 public:
  static Formula atom(std::string predicate, std::vector<Term> args = {});
  static Formula imp(Formula antecedent, Formula consequent);
  static Formula conj(Formula left, Formula right);
  static Formula disj(Formula left, Formula right);
  static Formula forall(std::string var, Formula body);
  static Formula exists(std::string var, Formula body);

  Connective connective() const { return node_->connective; }
  bool is_atom() const { return connective() == Connective::Atom; }
  bool is_imp() const { return connective() == Connective::Imp; }
  bool is_and() const { return connective() == Connective::And; }
  bool is_or() const { return connective() == Connective::Or; }
  bool is_forall() const { return connective() == Connective::Forall; }
  bool is_exists() const { return connective() == Connective::Exists; }
  bool is_binary() const { return is_imp() || is_and() || is_or(); }
  bool is_quantifier() const { return is_forall() || is_exists(); }

  // Atom only.
  const std::string& predicate() const { return node_->symbol; }
  std::span<const Term> args() const { return node_->args; }
  // Binary connectives only.
  const Formula& lhs() const { return node_->children[0]; }
  const Formula& rhs() const { return node_->children[1]; }
  // Quantifiers only.
  const std::string& bound_var() const { return node_->symbol; }
  const Formula& body() const { return node_->children[0]; }

  // Cached at construction.
  const VarSet& free_vars() const { return node_->free_vars; }

  // Syntactic identity. Use alpha_eq() for logical comparisons.
  friend bool operator==(const Formula& a, const Formula& b);

 private:
  struct Node {
    Connective connective;
    std::string symbol;
    std::vector<Term> args;
    std::vector<Formula> children;
    VarSet free_vars;
  };
  explicit Formula(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

struct Hypothesis {
  std::string label;
  Formula formula;
};

// A judgment Gamma |- A. The context is kept in order with labels, but rule
// checks treat it as a set of formulas up to alpha-equivalence.
struct Sequent {
  std::vector<Hypothesis> context;
  Formula conclusion;

  // Labels the formulas H1..Hn in order.
  static Sequent of(const std::vector<Formula>& context, Formula conclusion);

  std::vector<Formula> formulas() const;
  const Hypothesis* find(std::string_view label) const;
  bool contains(const Formula& f) const;
};

using Substitution = std::map<std::string, Term>;

VarSet free_vars(const Term& t);
VarSet free_vars(const Formula& f);
VarSet free_vars(std::span<const Formula> context);
VarSet free_vars(const Sequent& s);

// Every variable name occurring in f, free or bound.
void collect_var_names(const Formula& f, VarSet& out);
void collect_var_names(const Term& t, VarSet& out);

// Capture-avoiding substitution. Bound variables that would capture a
// variable of the substituted term are renamed with fresh_var().
Term substitute(const Term& t, const Substitution& subst);
Formula substitute(const Formula& f, const Substitution& subst);
Formula substitute(const Formula& f, const std::string& var, const Term& t);

bool alpha_eq(const Formula& f, const Formula& g);

// Name-independent key: two formulas have the same key iff they are
// alpha-equivalent. Used for set semantics over contexts.
std::string canonical_key(const Formula& f);

// base if unused, otherwise base1, base2, ... (smallest suffix not in avoid).
std::string fresh_var(const std::string& base, const VarSet& avoid);

bool contains_alpha(std::span<const Formula> set, const Formula& f);
// Set equality of two contexts up to alpha-equivalence; order and
// duplicates are ignored.
bool same_formula_set(std::span<const Formula> a, std::span<const Formula> b);

struct MatchResult {
  enum class Kind {
    NoMatch,
    Unique,
    // bound does not occur in the pattern and the pattern equals the target;
    // any term is a valid instance.
    AnyTerm,
  };
  Kind kind = Kind::NoMatch;
  std::optional<Term> term;

  explicit operator bool() const { return kind != Kind::NoMatch; }
};

// Finds t with substitute(pattern, bound, t) alpha-equal to target.
// Throws Error(AmbiguousMatch) if two free occurrences of bound demand
// different terms.
MatchResult match_against(const Formula& pattern, const std::string& bound,
                          const Formula& target);

// Subterms of the formulas that contain no locally bound variable, in order
// of first occurrence, without duplicates.
std::vector<Term> closed_subterms(std::span<const Formula> formulas);

}  // namespace minilog

#endif  // MINILOG_LOGIC_H_
