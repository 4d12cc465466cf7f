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

#include "minilog/kernel.h"

#include <array>
#include <set>

#include "minilog/textio.h"

namespace minilog {

namespace {

constexpr std::array<std::pair<Rule, std::string_view>, 14> kRuleNames{{
    {Rule::Hyp, "Hyp"},
    {Rule::ImpI, "ImpI"},
    {Rule::ImpE, "ImpE"},
    {Rule::AndI, "AndI"},
    {Rule::AndEL, "AndEL"},
    {Rule::AndER, "AndER"},
    {Rule::OrIL, "OrIL"},
    {Rule::OrIR, "OrIR"},
    {Rule::OrE, "OrE"},
    {Rule::ForallI, "ForallI"},
    {Rule::ForallE, "ForallE"},
    {Rule::ExistsI, "ExistsI"},
    {Rule::ExistsE, "ExistsE"},
    {Rule::Assumed, "Assumed"},
}};

using KeySet = std::set<std::string>;

KeySet context_keys(const Sequent& s) {
  KeySet out;
  for (const Hypothesis& h : s.context) out.insert(canonical_key(h.formula));
  return out;
}

KeySet with(KeySet set, const Formula& f) {
  set.insert(canonical_key(f));
  return set;
}

struct Reject {
  RejectReason reason;
  std::string message;
};

class Checker {
 public:
  explicit Checker(const Derivation& d) : d_(d) {
    for (const DerivationLine& l : d.lines) contexts_.push_back(context_keys(l.sequent));
  }

  CheckResult run() const {
    if (d_.lines.empty())
      return {0, RejectReason::BadPremiseShape, "empty derivation"};
    for (size_t i = 0; i < d_.lines.size(); ++i) {
      if (auto r = check_line(static_cast<int>(i) + 1))
        return {static_cast<int>(i) + 1, r->reason, r->message};
    }
    return {};
  }

 private:
  const Sequent& seq(int n) const { return d_.lines[n - 1].sequent; }
  const Formula& concl(int n) const { return seq(n).conclusion; }
  const KeySet& ctx(int n) const { return contexts_[n - 1]; }

  static std::optional<Reject> shape(std::string message) {
    return Reject{RejectReason::BadPremiseShape, std::move(message)};
  }

  std::optional<Reject> same_context(int line, int premise) const {
    if (ctx(premise) == ctx(line)) return std::nullopt;
    return Reject{RejectReason::ContextMismatch,
                  "premise " + std::to_string(premise) + " has a different context"};
  }

  std::optional<Reject> extended_context(int line, int premise, const Formula& added) const {
    if (ctx(premise) == with(ctx(line), added)) return std::nullopt;
    return Reject{RejectReason::ContextMismatch,
                  "premise " + std::to_string(premise) + " must extend the context with " +
                      render_formula(added)};
  }

  std::optional<Reject> eigenvariable(int line, const std::string& var,
                                      const Formula& quantified,
                                      const Formula* conclusion) const {
    VarSet fv = free_vars(seq(line));
    fv.insert(quantified.free_vars().begin(), quantified.free_vars().end());
    if (conclusion) fv.insert(conclusion->free_vars().begin(), conclusion->free_vars().end());
    if (!fv.contains(var)) return std::nullopt;
    return Reject{RejectReason::EigenvariableCaptured,
                  "eigenvariable '" + var + "' occurs free in the context or conclusion"};
  }

  // Eigenvariable named by the justification, defaulting to the bound variable.
  static std::optional<std::string> eigen_name(const Justification& j, const Formula& q) {
    if (!j.witness) return q.bound_var();
    if (!j.witness->is_var()) return std::nullopt;
    return j.witness->name();
  }

  std::optional<Reject> instance(const Justification& j, const Formula& quantified,
                                 const Formula& inst) const {
    if (j.witness) {
      if (alpha_eq(substitute(quantified.body(), quantified.bound_var(), *j.witness), inst))
        return std::nullopt;
      return Reject{RejectReason::WitnessMismatch,
                    "instantiating " + render_formula(quantified) + " with " +
                        render_term(*j.witness) + " does not give " + render_formula(inst)};
    }
    if (!quantified.body().free_vars().contains(quantified.bound_var()) &&
        alpha_eq(quantified.body(), inst))
      return std::nullopt;
    return Reject{RejectReason::WitnessMismatch, "missing witness term"};
  }

  std::optional<Reject> check_line(int n) const {
    const DerivationLine& line = d_.lines[n - 1];
    const Justification& j = line.justification;
    const Formula& c = line.sequent.conclusion;

    if (j.premises.size() != rule_arity(j.rule))
      return shape(std::string(to_string(j.rule)) + " expects " +
                   std::to_string(rule_arity(j.rule)) + " premise(s)");
    for (int p : j.premises)
      if (p < 1 || p >= n) return shape("premise index " + std::to_string(p) + " out of range");
    const auto& ps = j.premises;

    switch (j.rule) {
      case Rule::Hyp:
        if (ctx(n).contains(canonical_key(c))) return std::nullopt;
        return Reject{RejectReason::BadHyp, render_formula(c) + " is not in the context"};

      case Rule::Assumed:
        for (const Sequent& s : d_.assumed)
          if (check_judgment_equal(s, line.sequent)) return std::nullopt;
        return Reject{RejectReason::BadHyp, "judgment is not among the assumed judgments"};

      case Rule::ImpI:
        if (!c.is_imp()) return shape("conclusion is not an implication");
        if (!alpha_eq(concl(ps[0]), c.rhs())) return shape("premise does not prove the consequent");
        return extended_context(n, ps[0], c.lhs());

      case Rule::ImpE: {
        auto fits = [&](int minor, int major) {
          const Formula& m = concl(major);
          return m.is_imp() && alpha_eq(m.rhs(), c) && alpha_eq(m.lhs(), concl(minor));
        };
        if (!fits(ps[0], ps[1]) && !fits(ps[1], ps[0]))
          return shape("premises are not A and A -> " + render_formula(c));
        if (auto r = same_context(n, ps[0])) return r;
        return same_context(n, ps[1]);
      }

      case Rule::AndI:
        if (!c.is_and()) return shape("conclusion is not a conjunction");
        if (!alpha_eq(concl(ps[0]), c.lhs()) || !alpha_eq(concl(ps[1]), c.rhs()))
          return shape("premises do not prove both conjuncts");
        if (auto r = same_context(n, ps[0])) return r;
        return same_context(n, ps[1]);

      case Rule::AndEL:
      case Rule::AndER: {
        const Formula& p = concl(ps[0]);
        if (!p.is_and()) return shape("premise is not a conjunction");
        const Formula& part = j.rule == Rule::AndEL ? p.lhs() : p.rhs();
        if (!alpha_eq(part, c)) return shape("conclusion is not the selected conjunct");
        return same_context(n, ps[0]);
      }

      case Rule::OrIL:
      case Rule::OrIR: {
        if (!c.is_or()) return shape("conclusion is not a disjunction");
        const Formula& part = j.rule == Rule::OrIL ? c.lhs() : c.rhs();
        if (!alpha_eq(concl(ps[0]), part)) return shape("premise does not prove the disjunct");
        return same_context(n, ps[0]);
      }

      case Rule::OrE: {
        const Formula& dj = concl(ps[0]);
        if (!dj.is_or()) return shape("first premise is not a disjunction");
        if (!alpha_eq(concl(ps[1]), c) || !alpha_eq(concl(ps[2]), c))
          return shape("case premises do not prove the conclusion");
        if (auto r = same_context(n, ps[0])) return r;
        if (auto r = extended_context(n, ps[1], dj.lhs())) return r;
        return extended_context(n, ps[2], dj.rhs());
      }

      case Rule::ForallI: {
        if (!c.is_forall()) return shape("conclusion is not universal");
        auto var = eigen_name(j, c);
        if (!var) return shape("eigenvariable must be a variable");
        if (!alpha_eq(concl(ps[0]), substitute(c.body(), c.bound_var(), Term::var(*var))))
          return shape("premise is not the body at the eigenvariable");
        if (auto r = same_context(n, ps[0])) return r;
        return eigenvariable(n, *var, c, nullptr);
      }

      case Rule::ForallE: {
        const Formula& q = concl(ps[0]);
        if (!q.is_forall()) return shape("premise is not universal");
        if (auto r = instance(j, q, c)) return r;
        return same_context(n, ps[0]);
      }

      case Rule::ExistsI:
        if (!c.is_exists()) return shape("conclusion is not existential");
        if (auto r = instance(j, c, concl(ps[0]))) return r;
        return same_context(n, ps[0]);

      case Rule::ExistsE: {
        const Formula& q = concl(ps[0]);
        if (!q.is_exists()) return shape("first premise is not existential");
        if (!alpha_eq(concl(ps[1]), c)) return shape("second premise does not prove the conclusion");
        auto var = eigen_name(j, q);
        if (!var) return shape("eigenvariable must be a variable");
        if (auto r = same_context(n, ps[0])) return r;
        Formula body = substitute(q.body(), q.bound_var(), Term::var(*var));
        if (auto r = extended_context(n, ps[1], body)) return r;
        return eigenvariable(n, *var, q, &c);
      }
    }
    return shape("unknown rule");
  }

  const Derivation& d_;
  std::vector<KeySet> contexts_;
};

}  // namespace

std::string_view to_string(Rule rule) {
  for (const auto& [r, name] : kRuleNames)
    if (r == rule) return name;
  return "?";
}

std::optional<Rule> rule_from_string(std::string_view name) {
  for (const auto& [r, n] : kRuleNames)
    if (n == name) return r;
  return std::nullopt;
}

size_t rule_arity(Rule rule) {
  switch (rule) {
    case Rule::Hyp:
    case Rule::Assumed:
      return 0;
    case Rule::ImpE:
    case Rule::AndI:
    case Rule::ExistsE:
      return 2;
    case Rule::OrE:
      return 3;
    default:
      return 1;
  }
}

std::string_view to_string(RejectReason reason) {
  switch (reason) {
    case RejectReason::None: return "None";
    case RejectReason::BadHyp: return "BadHyp";
    case RejectReason::BadPremiseShape: return "BadPremiseShape";
    case RejectReason::EigenvariableCaptured: return "EigenvariableCaptured";
    case RejectReason::WitnessMismatch: return "WitnessMismatch";
    case RejectReason::ContextMismatch: return "ContextMismatch";
  }
  return "?";
}

CheckResult check_derivation(const Derivation& d) { return Checker(d).run(); }

bool check_judgment_equal(const Sequent& a, const Sequent& b) {
  return alpha_eq(a.conclusion, b.conclusion) && context_keys(a) == context_keys(b);
}

// ---------------------------------------------------------------- builder

int DerivationBuilder::add(Sequent sequent, Justification justification) {
  out_.lines.push_back({std::move(sequent), std::move(justification)});
  return size();
}

int DerivationBuilder::append(const Derivation& d) {
  const int offset = size();
  for (const DerivationLine& l : d.lines) {
    Justification j = l.justification;
    for (int& p : j.premises) p += offset;
    out_.lines.push_back({l.sequent, std::move(j)});
  }
  for (const Sequent& s : d.assumed) assume(s);
  return size();
}

void DerivationBuilder::assume(const Sequent& s) {
  for (const Sequent& a : out_.assumed)
    if (check_judgment_equal(a, s)) return;
  out_.assumed.push_back(s);
}

Derivation DerivationBuilder::finish() && { return std::move(out_); }

}  // namespace minilog
