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

#include "minilog/autoprove.h"

#include <algorithm>
#include <optional>
#include <set>

#include "minilog/error.h"

namespace minilog {

namespace {

struct OutOfNodes {};

std::string goal_key(const Sequent& g) {
  std::set<std::string> keys;
  for (const Hypothesis& h : g.context) keys.insert(canonical_key(h.formula));
  std::string out;
  for (const std::string& k : keys) out += k + ",";
  return out + "|-" + canonical_key(g.conclusion);
}

class Search {
 public:
  explicit Search(const SearchConfig& config) : config_(config) {}

  std::optional<Script> iterate(const Sequent& goal, int depth) {
    cutoff_ = false;
    ancestors_.clear();
    return solve(goal, depth);
  }

  bool cutoff() const { return cutoff_; }
  long nodes() const { return nodes_; }

 private:
  std::vector<Tactic> candidates(const Sequent& g) const {
    std::vector<Tactic> out;
    const Formula& c = g.conclusion;

    if (g.contains(c)) out.push_back(tactic::Trivial{});
    for (const Hypothesis& h : g.context) {
      if (!h.formula.is_forall()) continue;
      try {
        if (match_against(h.formula.body(), h.formula.bound_var(), c))
          out.push_back(tactic::Apply{h.label, std::nullopt});
      } catch (const Error&) {
      }
    }

    switch (c.connective()) {
      case Connective::Imp:
      case Connective::Forall:
        out.push_back(tactic::Intro{});
        break;
      case Connective::And:
        out.push_back(tactic::Split{});
        break;
      case Connective::Or:
        out.push_back(tactic::Left{});
        out.push_back(tactic::Right{});
        break;
      case Connective::Exists: {
        std::vector<Formula> all = g.formulas();
        all.push_back(c);
        std::vector<Term> pool = closed_subterms(all);
        if (pool.empty()) pool.push_back(Term::var(c.bound_var()));
        for (const Term& t : pool) out.push_back(tactic::Exists{t});
        break;
      }
      case Connective::Atom:
        break;
    }

    for (const Hypothesis& h : g.context) {
      const Formula& f = h.formula;
      if (f.is_imp() && alpha_eq(f.rhs(), c))
        out.push_back(tactic::Apply{h.label, std::nullopt});
      else if (f.is_and() || f.is_or() || f.is_exists())
        out.push_back(tactic::Destruct{h.label});
    }

    if (config_.lemma_policy == LemmaPolicy::ImplicationConsequents) {
      std::vector<Formula> lemmas;
      for (const Hypothesis& h : g.context) {
        const Formula& f = h.formula;
        if (f.is_imp() && !g.contains(f.rhs()) && !contains_alpha(lemmas, f.rhs()))
          lemmas.push_back(f.rhs());
      }
      for (const Formula& l : lemmas) out.push_back(tactic::Assert{l, std::nullopt});
    }
    return out;
  }

  std::optional<Script> solve(const Sequent& g, int depth) {
    if (depth == 0) {
      cutoff_ = true;
      return std::nullopt;
    }
    std::string key = goal_key(g);
    if (ancestors_.contains(key)) return std::nullopt;
    ancestors_.insert(key);
    std::optional<Script> result;
    for (const Tactic& t : candidates(g)) {
      if (nodes_ == config_.max_nodes) throw OutOfNodes{};
      ++nodes_;
      std::vector<Sequent> subgoals;
      try {
        subgoals = apply_tactic(GoalState(g), t).goals();
      } catch (const Error&) {
        continue;
      }
      Script script{t};
      bool ok = true;
      for (const Sequent& sub : subgoals) {
        std::optional<Script> s = solve(sub, depth - 1);
        if (!s) {
          ok = false;
          break;
        }
        script.insert(script.end(), s->begin(), s->end());
      }
      if (ok) {
        result = std::move(script);
        break;
      }
    }
    ancestors_.erase(key);
    return result;
  }

  const SearchConfig& config_;
  std::set<std::string> ancestors_;
  bool cutoff_ = false;
  long nodes_ = 0;
};

}  // namespace

std::string_view to_string(SearchResult::Reason reason) {
  switch (reason) {
    case SearchResult::Reason::None: return "None";
    case SearchResult::Reason::DepthExhausted: return "DepthExhausted";
    case SearchResult::Reason::NodesExhausted: return "NodesExhausted";
  }
  return "?";
}

SearchResult auto_search(const Sequent& goal, const SearchConfig& config) {
  if (config.max_depth < 1 || config.max_nodes < 1)
    throw Error(ErrorCode::SyntaxError, "search bounds must be positive");
  Search search(config);
  SearchResult r;
  try {
    for (int depth = 1; depth <= config.max_depth; ++depth) {
      r.depth = depth;
      if (std::optional<Script> s = search.iterate(goal, depth)) {
        r.status = SearchResult::Status::Found;
        r.script = std::move(*s);
        r.nodes = search.nodes();
        return r;
      }
      // Nothing was cut off by the bound: deeper iterations see the same tree.
      if (!search.cutoff()) break;
    }
    r.reason = SearchResult::Reason::DepthExhausted;
  } catch (const OutOfNodes&) {
    r.reason = SearchResult::Reason::NodesExhausted;
  }
  r.nodes = search.nodes();
  return r;
}

}  // namespace minilog
