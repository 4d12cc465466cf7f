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

// Admissible transformations on derivations: weakening with eigenvariable
// renaming, and grafting a lemma proof into the hypothesis uses of the lemma.

#include <map>

#include "minilog/error.h"
#include "minilog/kernel.h"
#include "minilog/textio.h"

namespace minilog {

namespace {

void collect_names(const Derivation& d, VarSet& out) {
  for (const DerivationLine& l : d.lines) {
    for (const Hypothesis& h : l.sequent.context) collect_var_names(h.formula, out);
    collect_var_names(l.sequent.conclusion, out);
    if (l.justification.witness) collect_var_names(*l.justification.witness, out);
  }
}

std::string subst_key(const Substitution& s) {
  std::string key;
  for (const auto& [v, t] : s) {
    key += v;
    key += '=';
    key += render_term(t);
    key += ';';
  }
  return key;
}

class Instantiator {
 public:
  Instantiator(const Derivation& d, std::vector<Formula> extra)
      : d_(d), extra_(std::move(extra)) {
    danger_ = free_vars(std::span<const Formula>(extra_));
    collect_names(d, names_);
    names_.insert(danger_.begin(), danger_.end());
  }

  Derivation run(const Substitution& subst) && {
    emit(static_cast<int>(d_.lines.size()), subst);
    return std::move(out_).finish();
  }

 private:
  int emit(int n, const Substitution& s) {
    auto key = std::make_pair(n, subst_key(s));
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;

    const DerivationLine& line = d_.lines[n - 1];
    std::vector<Formula> ctx;
    for (const Hypothesis& h : line.sequent.context) ctx.push_back(substitute(h.formula, s));
    ctx.insert(ctx.end(), extra_.begin(), extra_.end());
    Sequent seq = Sequent::of(ctx, substitute(line.sequent.conclusion, s));

    Justification j = line.justification;
    switch (j.rule) {
      case Rule::ForallI:
      case Rule::ExistsE: {
        const Formula& q = j.rule == Rule::ForallI
                               ? line.sequent.conclusion
                               : d_.lines[j.premises[0] - 1].sequent.conclusion;
        const std::string eigen = j.witness ? j.witness->name() : q.bound_var();
        VarSet range;
        for (const auto& [v, t] : s) collect_var_names(t, range);
        std::string renamed = eigen;
        if (danger_.contains(eigen) || range.contains(eigen)) {
          VarSet avoid = names_;
          avoid.insert(range.begin(), range.end());
          renamed = fresh_var(eigen, avoid);
        }
        Substitution inner = s;
        inner.erase(eigen);
        if (renamed != eigen) inner.emplace(eigen, Term::var(renamed));
        if (j.rule == Rule::ForallI) {
          j.premises[0] = emit(j.premises[0], inner);
        } else {
          j.premises[0] = emit(j.premises[0], s);
          j.premises[1] = emit(j.premises[1], inner);
        }
        j.witness = Term::var(renamed);
        break;
      }
      case Rule::ForallE:
      case Rule::ExistsI:
        if (j.witness) j.witness = substitute(*j.witness, s);
        j.premises[0] = emit(j.premises[0], s);
        break;
      case Rule::Assumed:
        out_.assume(seq);
        break;
      default:
        for (int& p : j.premises) p = emit(p, s);
    }
    int result = out_.add(std::move(seq), std::move(j));
    memo_.emplace(std::move(key), result);
    return result;
  }

  const Derivation& d_;
  std::vector<Formula> extra_;
  VarSet danger_;
  VarSet names_;
  DerivationBuilder out_;
  std::map<std::pair<int, std::string>, int> memo_;
};

class Grafter {
 public:
  Grafter(const Derivation& major, const Derivation& minor, const Formula& lemma)
      : major_(major), minor_(minor), lemma_(lemma), gamma_(minor.conclusion().formulas()) {
    for (const Sequent& s : major.assumed) out_.assume(s);
  }

  Derivation run() && {
    emit(static_cast<int>(major_.lines.size()), true);
    return std::move(out_).finish();
  }

 private:
  // strip == false copies the line verbatim: the lemma was discharged again
  // below it, so its hypothesis uses refer to the local assumption.
  int emit(int n, bool strip) {
    auto key = std::make_pair(n, strip);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    int result = strip ? emit_stripped(n) : emit_verbatim(n);
    memo_.emplace(key, result);
    return result;
  }

  int emit_verbatim(int n) {
    const DerivationLine& line = major_.lines[n - 1];
    Justification j = line.justification;
    for (int& p : j.premises) p = emit(p, false);
    if (j.rule == Rule::Assumed) out_.assume(line.sequent);
    return out_.add(line.sequent, std::move(j));
  }

  // Proof of lemma under the given context (a superset of Gamma).
  int lemma_proof(const std::vector<Formula>& ctx) {
    std::vector<Formula> extra;
    for (const Formula& f : ctx)
      if (!contains_alpha(gamma_, f)) extra.push_back(f);
    return out_.append(weaken(minor_, extra));
  }

  int emit_stripped(int n) {
    const DerivationLine& line = major_.lines[n - 1];
    const Formula& c = line.sequent.conclusion;
    std::vector<Formula> ctx;
    for (const Hypothesis& h : line.sequent.context)
      if (!alpha_eq(h.formula, lemma_)) ctx.push_back(h.formula);

    Justification j = line.justification;
    auto keep = [&](const Formula& discharged) { return !alpha_eq(discharged, lemma_); };
    switch (j.rule) {
      case Rule::Hyp:
        if (alpha_eq(c, lemma_)) return lemma_proof(ctx);
        break;
      case Rule::Assumed: {
        // Gamma', lemma |- C stays assumed; discharge the lemma and apply it.
        out_.assume(line.sequent);
        int assumed = out_.add(line.sequent, {Rule::Assumed, {}, std::nullopt});
        int imp = out_.add(Sequent::of(ctx, Formula::imp(lemma_, c)),
                           {Rule::ImpI, {assumed}, std::nullopt});
        int arg = lemma_proof(ctx);
        return out_.add(Sequent::of(ctx, c), {Rule::ImpE, {arg, imp}, std::nullopt});
      }
      case Rule::ImpI:
        j.premises[0] = emit(j.premises[0], keep(c.lhs()));
        break;
      case Rule::OrE: {
        const Formula& dj = major_.lines[j.premises[0] - 1].sequent.conclusion;
        j.premises[0] = emit(j.premises[0], true);
        j.premises[1] = emit(j.premises[1], keep(dj.lhs()));
        j.premises[2] = emit(j.premises[2], keep(dj.rhs()));
        break;
      }
      case Rule::ExistsE: {
        const Formula& q = major_.lines[j.premises[0] - 1].sequent.conclusion;
        const Term eigen = j.witness ? *j.witness : Term::var(q.bound_var());
        j.premises[0] = emit(j.premises[0], true);
        j.premises[1] = emit(j.premises[1], keep(substitute(q.body(), q.bound_var(), eigen)));
        break;
      }
      default:
        for (int& p : j.premises) p = emit(p, true);
    }
    return out_.add(Sequent::of(ctx, c), std::move(j));
  }

  const Derivation& major_;
  const Derivation& minor_;
  const Formula& lemma_;
  std::vector<Formula> gamma_;
  DerivationBuilder out_;
  std::map<std::pair<int, bool>, int> memo_;
};

}  // namespace

Derivation instantiate(const Derivation& d, const Substitution& subst,
                       const std::vector<Formula>& extra) {
  if (d.lines.empty()) throw Error(ErrorCode::InvalidDerivation, "empty derivation");
  return Instantiator(d, extra).run(subst);
}

Derivation weaken(const Derivation& d, const std::vector<Formula>& extra) {
  return instantiate(d, {}, extra);
}

Derivation graft(const Derivation& major, const Derivation& minor, const Formula& lemma) {
  if (major.lines.empty() || minor.lines.empty())
    throw Error(ErrorCode::InvalidDerivation, "empty derivation");
  if (!alpha_eq(minor.conclusion().conclusion, lemma))
    throw Error(ErrorCode::ContextMismatch,
                "minor derivation proves " + render_formula(minor.conclusion().conclusion) +
                    ", not " + render_formula(lemma));
  std::vector<Formula> gamma = minor.conclusion().formulas();
  std::vector<Formula> expected = gamma;
  expected.push_back(lemma);
  if (!same_formula_set(major.conclusion().formulas(), expected))
    throw Error(ErrorCode::ContextMismatch,
                "major context is not the minor context extended with " + render_formula(lemma));

  if (contains_alpha(gamma, lemma)) {
    DerivationBuilder out;
    out.append(major);
    for (const Sequent& s : minor.assumed) out.assume(s);
    return std::move(out).finish();
  }
  return Grafter(major, minor, lemma).run();
}

}  // namespace minilog
