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

#include "minilog/textio.h"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>

#include "json.hpp"
#include "minilog/error.h"

namespace minilog {

namespace {

// ---------------------------------------------------------------- lexer

enum class Tok {
  Ident,
  Number,
  Arrow,      // ->
  And,        // /\ (backslash)
  Or,         // \/ (backslash first)
  LParen,
  RParen,
  Comma,
  Dot,
  Colon,
  Assign,     // :=
  Turnstile,  // |-
  Pipe,
  End,
};

struct Token {
  Tok kind;
  std::string text;
  int line;
  int column;
};

std::string_view describe(Tok kind) {
  switch (kind) {
    case Tok::Ident: return "identifier";
    case Tok::Number: return "number";
    case Tok::Arrow: return "'->'";
    case Tok::And: return "'/\\'";
    case Tok::Or: return "'\\/'";
    case Tok::LParen: return "'('";
    case Tok::RParen: return "')'";
    case Tok::Comma: return "','";
    case Tok::Dot: return "'.'";
    case Tok::Colon: return "':'";
    case Tok::Assign: return "':='";
    case Tok::Turnstile: return "'|-'";
    case Tok::Pipe: return "'|'";
    case Tok::End: return "end of input";
  }
  return "?";
}

bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool ident_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\'';
}

std::vector<Token> lex(std::string_view text) {
  std::vector<Token> out;
  int line = 1;
  int col = 1;
  size_t i = 0;
  auto advance = [&](size_t n) {
    i += n;
    col += static_cast<int>(n);
  };
  while (i < text.size()) {
    char c = text[i];
    if (c == '\n') {
      ++i;
      ++line;
      col = 1;
      continue;
    }
    if (std::isspace(static_cast<unsigned char>(c))) {
      advance(1);
      continue;
    }
    if (text.substr(i, 2) == "--") {
      while (i < text.size() && text[i] != '\n') ++i;
      continue;
    }
    const int start_col = col;
    auto push = [&](Tok k, size_t n) {
      out.push_back({k, std::string(text.substr(i, n)), line, start_col});
      advance(n);
    };
    if (ident_start(c)) {
      size_t n = 1;
      while (i + n < text.size() && ident_char(text[i + n])) ++n;
      push(Tok::Ident, n);
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      size_t n = 1;
      while (i + n < text.size() && std::isdigit(static_cast<unsigned char>(text[i + n]))) ++n;
      push(Tok::Number, n);
    } else if (text.substr(i, 2) == "->") {
      push(Tok::Arrow, 2);
    } else if (text.substr(i, 2) == "/\\") {
      push(Tok::And, 2);
    } else if (text.substr(i, 2) == "\\/") {
      push(Tok::Or, 2);
    } else if (text.substr(i, 2) == "|-") {
      push(Tok::Turnstile, 2);
    } else if (text.substr(i, 2) == ":=") {
      push(Tok::Assign, 2);
    } else if (c == '(') {
      push(Tok::LParen, 1);
    } else if (c == ')') {
      push(Tok::RParen, 1);
    } else if (c == ',') {
      push(Tok::Comma, 1);
    } else if (c == '.') {
      push(Tok::Dot, 1);
    } else if (c == ':') {
      push(Tok::Colon, 1);
    } else if (c == '|') {
      push(Tok::Pipe, 1);
    } else {
      throw Error(ErrorCode::SyntaxError, std::string("unexpected character '") + c + "'",
                  line, col);
    }
  }
  out.push_back({Tok::End, "", line, col});
  return out;
}

// ---------------------------------------------------------------- parser

bool is_quantifier_keyword(const Token& t) {
  return t.kind == Tok::Ident && (t.text == "forall" || t.text == "exists");
}

class Parser {
 public:
  Parser(std::vector<Token> tokens, SymbolTable& symbols)
      : tokens_(std::move(tokens)), symbols_(symbols) {}

  const Token& peek(size_t ahead = 0) const {
    return tokens_[std::min(pos_ + ahead, tokens_.size() - 1)];
  }
  bool at(Tok kind) const { return peek().kind == kind; }
  bool at_word(std::string_view word) const {
    return peek().kind == Tok::Ident && peek().text == word;
  }
  bool at_end() const { return at(Tok::End); }

  Token take() {
    Token t = peek();
    if (pos_ + 1 < tokens_.size()) ++pos_;
    return t;
  }

  bool accept(Tok kind) {
    if (!at(kind)) return false;
    take();
    return true;
  }

  Token expect(Tok kind) {
    if (!at(kind)) fail("expected " + std::string(describe(kind)));
    return take();
  }

  std::string expect_ident() {
    if (!at(Tok::Ident) || is_quantifier_keyword(peek())) fail("expected identifier");
    return take().text;
  }

  void expect_word(std::string_view word) {
    if (!at_word(word)) fail("expected '" + std::string(word) + "'");
    take();
  }

  [[noreturn]] void fail(const std::string& message) const {
    const Token& t = peek();
    std::string found = t.kind == Tok::End ? "end of input" : "'" + t.text + "'";
    throw Error(ErrorCode::SyntaxError, message + ", found " + found, t.line, t.column);
  }

  Formula formula() { return imp(); }

  Term term() {
    const Token& start = peek();
    std::string name = expect_ident();
    if (!accept(Tok::LParen)) return Term::var(name);
    std::vector<Term> args;
    if (!at(Tok::RParen)) {
      args.push_back(term());
      while (accept(Tok::Comma)) args.push_back(term());
    }
    expect(Tok::RParen);
    check_arity(symbols_.functions, "function", name, args.size(), start);
    return Term::app(name, std::move(args));
  }

 private:
  Formula imp() {
    Formula lhs = disj();
    if (!accept(Tok::Arrow)) return lhs;
    return Formula::imp(std::move(lhs), imp());
  }

  Formula disj() {
    Formula f = conj();
    while (accept(Tok::Or)) f = Formula::disj(std::move(f), conj());
    return f;
  }

  Formula conj() {
    Formula f = qf();
    while (accept(Tok::And)) f = Formula::conj(std::move(f), qf());
    return f;
  }

  Formula qf() {
    if (accept(Tok::LParen)) {
      Formula f = formula();
      expect(Tok::RParen);
      return f;
    }
    if (is_quantifier_keyword(peek())) {
      bool universal = take().text == "forall";
      std::string var = expect_ident();
      expect(Tok::Dot);
      Formula body = imp();
      return universal ? Formula::forall(var, std::move(body))
                       : Formula::exists(var, std::move(body));
    }
    return atom();
  }

  Formula atom() {
    const Token& start = peek();
    if (!at(Tok::Ident)) fail("expected formula");
    std::string name = expect_ident();
    std::vector<Term> args;
    if (accept(Tok::LParen)) {
      args.push_back(term());
      while (accept(Tok::Comma)) args.push_back(term());
      expect(Tok::RParen);
    }
    check_arity(symbols_.predicates, "predicate", name, args.size(), start);
    return Formula::atom(name, std::move(args));
  }

  static void check_arity(std::map<std::string, size_t>& table, std::string_view kind,
                          const std::string& name, size_t arity, const Token& at) {
    auto [it, inserted] = table.emplace(name, arity);
    if (!inserted && it->second != arity)
      throw Error(ErrorCode::ArityError,
                  std::string(kind) + " '" + name + "' used with " + std::to_string(arity) +
                      " argument(s), previously " + std::to_string(it->second),
                  at.line, at.column);
  }

  std::vector<Token> tokens_;
  size_t pos_ = 0;
  SymbolTable& symbols_;
};

// Splits a token stream into per-line streams, each terminated by End.
std::vector<std::vector<Token>> split_lines(const std::vector<Token>& tokens) {
  std::vector<std::vector<Token>> lines;
  int current = -1;
  for (const Token& t : tokens) {
    if (t.kind == Tok::End) break;
    if (t.line != current) {
      if (!lines.empty()) {
        const Token& last = lines.back().back();
        lines.back().push_back({Tok::End, "", last.line, last.column + 1});
      }
      lines.emplace_back();
      current = t.line;
    }
    lines.back().push_back(t);
  }
  if (!lines.empty()) {
    const Token& last = lines.back().back();
    lines.back().push_back({Tok::End, "", last.line, last.column + 1});
  }
  return lines;
}

// ---------------------------------------------------------------- rendering

int precedence(const Formula& f) {
  switch (f.connective()) {
    case Connective::Imp: return 1;
    case Connective::Or: return 2;
    case Connective::And: return 3;
    default: return 4;
  }
}

void render_term_to(const Term& t, std::string& out) {
  out += t.name();
  if (t.is_var()) return;
  out += '(';
  for (size_t i = 0; i < t.args().size(); ++i) {
    if (i) out += ", ";
    render_term_to(t.args()[i], out);
  }
  out += ')';
}

// open_right: nothing follows f at this nesting level, so a quantifier body
// may extend to the end without parentheses.
void render_to(const Formula& f, int min_prec, bool open_right, std::string& out) {
  const bool paren = precedence(f) < min_prec || (f.is_quantifier() && !open_right);
  if (paren) {
    out += '(';
    open_right = true;
  }
  switch (f.connective()) {
    case Connective::Atom:
      out += f.predicate();
      if (!f.args().empty()) {
        out += '(';
        for (size_t i = 0; i < f.args().size(); ++i) {
          if (i) out += ", ";
          render_term_to(f.args()[i], out);
        }
        out += ')';
      }
      break;
    case Connective::Imp:
      render_to(f.lhs(), 2, false, out);
      out += " -> ";
      render_to(f.rhs(), 1, open_right, out);
      break;
    case Connective::Or:
      render_to(f.lhs(), 2, false, out);
      out += " \\/ ";
      render_to(f.rhs(), 3, open_right, out);
      break;
    case Connective::And:
      render_to(f.lhs(), 3, false, out);
      out += " /\\ ";
      render_to(f.rhs(), 4, open_right, out);
      break;
    case Connective::Forall:
    case Connective::Exists:
      out += f.is_forall() ? "forall " : "exists ";
      out += f.bound_var();
      out += ". ";
      render_to(f.body(), 1, open_right, out);
      break;
  }
  if (paren) out += ')';
}

// ---------------------------------------------------------------- derivations

const ContextAlias* find_alias(const std::vector<ContextAlias>& aliases, std::string_view name) {
  for (const ContextAlias& a : aliases)
    if (a.name == name) return &a;
  return nullptr;
}

std::vector<Formula> parse_context(Parser& p, const std::vector<ContextAlias>& aliases) {
  std::vector<Formula> ctx;
  if (p.at(Tok::Turnstile)) return ctx;
  do {
    const Token& t = p.peek();
    const ContextAlias* alias = t.kind == Tok::Ident ? find_alias(aliases, t.text) : nullptr;
    if (alias && (p.peek(1).kind == Tok::Comma || p.peek(1).kind == Tok::Turnstile)) {
      p.take();
      ctx.insert(ctx.end(), alias->formulas.begin(), alias->formulas.end());
    } else {
      ctx.push_back(p.formula());
    }
  } while (p.accept(Tok::Comma));
  return ctx;
}

int parse_index(const Token& t) {
  try {
    return std::stoi(t.text);
  } catch (const std::exception&) {
    throw Error(ErrorCode::BadIndex, "index out of range", t.line, t.column);
  }
}

void parse_justification(Parser& p, int index, Justification& j) {
  const Token rule_tok = p.peek();
  std::string name = p.expect_ident();
  auto rule = rule_from_string(name);
  if (!rule)
    throw Error(ErrorCode::SyntaxError, "unknown rule '" + name + "'", rule_tok.line,
                rule_tok.column);
  j.rule = *rule;
  if (p.at(Tok::Number)) {
    do {
      Token t = p.expect(Tok::Number);
      int premise = parse_index(t);
      if (premise < 1 || premise >= index)
        throw Error(ErrorCode::BadIndex,
                    "premise " + std::to_string(premise) + " must precede line " +
                        std::to_string(index),
                    t.line, t.column);
      j.premises.push_back(premise);
    } while (p.accept(Tok::Comma));
  }
  if (!p.at_end()) j.witness = p.term();
  if (!p.at_end()) p.fail("expected end of line");
}

DerivationFile parse_derivation_text(std::string_view text) {
  DerivationFile file;
  SymbolTable symbols;
  for (auto& tokens : split_lines(lex(text))) {
    Parser p(std::move(tokens), symbols);
    if (p.at_word("context")) {
      p.take();
      const Token name_tok = p.peek();
      ContextAlias alias{p.expect_ident(), {}};
      if (find_alias(file.aliases, alias.name))
        throw Error(ErrorCode::DuplicateLabel, "context '" + alias.name + "' defined twice",
                    name_tok.line, name_tok.column);
      p.expect(Tok::Assign);
      if (!p.at_end()) {
        do alias.formulas.push_back(p.formula());
        while (p.accept(Tok::Comma));
      }
      if (!p.at_end()) p.fail("expected end of line");
      file.aliases.push_back(std::move(alias));
      continue;
    }
    if (p.at_word("assume")) {
      p.take();
      auto ctx = parse_context(p, file.aliases);
      p.expect(Tok::Turnstile);
      Formula c = p.formula();
      if (!p.at_end()) p.fail("expected end of line");
      file.derivation.assumed.push_back(Sequent::of(ctx, c));
      continue;
    }
    const Token index_tok = p.expect(Tok::Number);
    const int index = parse_index(index_tok);
    const int expected = static_cast<int>(file.derivation.lines.size()) + 1;
    if (index != expected)
      throw Error(ErrorCode::BadIndex,
                  "line index " + std::to_string(index) + ", expected " + std::to_string(expected),
                  index_tok.line, index_tok.column);
    p.expect(Tok::Pipe);
    auto ctx = parse_context(p, file.aliases);
    p.expect(Tok::Turnstile);
    Formula c = p.formula();
    p.expect(Tok::Pipe);
    Justification j;
    parse_justification(p, index, j);
    file.derivation.lines.push_back({Sequent::of(ctx, c), std::move(j)});
  }
  if (file.derivation.lines.empty())
    throw Error(ErrorCode::SyntaxError, "derivation has no lines", 1, 1);
  return file;
}

using nlohmann::json;

std::vector<Formula> json_context(const json& items, const std::vector<ContextAlias>& aliases,
                                  SymbolTable& symbols) {
  std::vector<Formula> ctx;
  for (const json& item : items) {
    std::string s = item.get<std::string>();
    if (const ContextAlias* a = find_alias(aliases, s))
      ctx.insert(ctx.end(), a->formulas.begin(), a->formulas.end());
    else
      ctx.push_back(parse_formula(s, symbols));
  }
  return ctx;
}

DerivationFile parse_derivation_json(std::string_view text) {
  DerivationFile file;
  SymbolTable symbols;
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::SyntaxError, e.what());
  }
  try {
    if (doc.contains("aliases")) {
      for (const auto& [name, formulas] : doc.at("aliases").items()) {
        ContextAlias alias{name, {}};
        for (const json& f : formulas)
          alias.formulas.push_back(parse_formula(f.get<std::string>(), symbols));
        file.aliases.push_back(std::move(alias));
      }
    }
    if (doc.contains("assumed")) {
      for (const json& a : doc.at("assumed"))
        file.derivation.assumed.push_back(
            Sequent::of(json_context(a.at("context"), file.aliases, symbols),
                        parse_formula(a.at("conclusion").get<std::string>(), symbols)));
    }
    for (const json& l : doc.at("lines")) {
      const int index = l.at("index").get<int>();
      const int expected = static_cast<int>(file.derivation.lines.size()) + 1;
      if (index != expected)
        throw Error(ErrorCode::BadIndex, "line index " + std::to_string(index) + ", expected " +
                                             std::to_string(expected));
      Justification j;
      std::string rule = l.at("rule").get<std::string>();
      auto r = rule_from_string(rule);
      if (!r) throw Error(ErrorCode::SyntaxError, "unknown rule '" + rule + "'");
      j.rule = *r;
      for (const json& p : l.value("premises", json::array())) {
        int premise = p.get<int>();
        if (premise < 1 || premise >= index)
          throw Error(ErrorCode::BadIndex, "premise " + std::to_string(premise) +
                                               " must precede line " + std::to_string(index));
        j.premises.push_back(premise);
      }
      if (l.contains("witness") && !l.at("witness").is_null()) {
        Parser p(lex(l.at("witness").get<std::string>()), symbols);
        j.witness = p.term();
        if (!p.at_end()) p.fail("expected end of witness");
      }
      file.derivation.lines.push_back(
          {Sequent::of(json_context(l.at("context"), file.aliases, symbols),
                       parse_formula(l.at("conclusion").get<std::string>(), symbols)),
           std::move(j)});
    }
  } catch (const json::exception& e) {
    throw Error(ErrorCode::SyntaxError, e.what());
  }
  if (file.derivation.lines.empty()) throw Error(ErrorCode::SyntaxError, "derivation has no lines");
  return file;
}

// Context items for rendering: the longest alias whose formulas form a prefix
// of the context is written by name.
std::vector<std::string> context_items(const Sequent& s, const std::vector<ContextAlias>& aliases) {
  std::vector<std::string> items;
  size_t start = 0;
  const ContextAlias* best = nullptr;
  for (const ContextAlias& a : aliases) {
    if (a.formulas.empty() || a.formulas.size() > s.context.size()) continue;
    bool prefix = true;
    for (size_t i = 0; i < a.formulas.size() && prefix; ++i)
      prefix = a.formulas[i] == s.context[i].formula;
    if (prefix && (!best || a.formulas.size() > best->formulas.size())) best = &a;
  }
  if (best) {
    items.push_back(best->name);
    start = best->formulas.size();
  }
  for (size_t i = start; i < s.context.size(); ++i)
    items.push_back(render_formula(s.context[i].formula));
  return items;
}

std::string join(const std::vector<std::string>& parts, std::string_view sep) {
  std::string out;
  for (size_t i = 0; i < parts.size(); ++i) {
    if (i) out += sep;
    out += parts[i];
  }
  return out;
}

}  // namespace

// ---------------------------------------------------------------- formulas

Formula parse_formula(std::string_view text) {
  SymbolTable symbols;
  return parse_formula(text, symbols);
}

Formula parse_formula(std::string_view text, SymbolTable& symbols) {
  Parser p(lex(text), symbols);
  Formula f = p.formula();
  if (!p.at_end()) p.fail("expected end of formula");
  return f;
}

Term parse_term(std::string_view text) {
  SymbolTable symbols;
  Parser p(lex(text), symbols);
  Term t = p.term();
  if (!p.at_end()) p.fail("expected end of term");
  return t;
}

std::string render_formula(const Formula& f) {
  std::string out;
  render_to(f, 1, true, out);
  return out;
}

std::string render_term(const Term& t) {
  std::string out;
  render_term_to(t, out);
  return out;
}

std::string render_sequent(const Sequent& s, bool with_labels) {
  std::vector<std::string> items;
  for (const Hypothesis& h : s.context)
    items.push_back(with_labels ? h.label + ": " + render_formula(h.formula)
                                : render_formula(h.formula));
  std::string out = join(items, ", ");
  if (!out.empty()) out += ' ';
  return out + "|- " + render_formula(s.conclusion);
}

std::string render_goals(const std::vector<Sequent>& goals, bool with_labels) {
  if (goals.empty()) return "[]";
  std::vector<std::string> parts;
  for (const Sequent& g : goals) parts.push_back(render_sequent(g, with_labels));
  return join(parts, " ; ");
}

// ---------------------------------------------------------------- theorems

TheoremFile parse_theorem(std::string_view text, SymbolTable* symbols) {
  SymbolTable local;
  SymbolTable& table = symbols ? *symbols : local;
  std::vector<Hypothesis> hyps;
  std::optional<TheoremFile> result;
  for (auto& tokens : split_lines(lex(text))) {
    Parser p(std::move(tokens), table);
    if (result) p.fail("nothing may follow the theorem line");
    if (p.at_word("hyp")) {
      p.take();
      const Token label_tok = p.peek();
      std::string label = p.expect_ident();
      if (std::ranges::find(hyps, label, &Hypothesis::label) != hyps.end())
        throw Error(ErrorCode::DuplicateLabel, "hypothesis '" + label + "' declared twice",
                    label_tok.line, label_tok.column);
      p.expect(Tok::Colon);
      Formula f = p.formula();
      p.accept(Tok::Dot);
      if (!p.at_end()) p.fail("expected end of line");
      hyps.push_back({label, f});
    } else if (p.at_word("theorem")) {
      p.take();
      std::string name = p.expect_ident();
      p.expect(Tok::Colon);
      Formula f = p.formula();
      p.accept(Tok::Dot);
      if (!p.at_end()) p.fail("expected end of line");
      result = TheoremFile{hyps, name, f};
    } else {
      p.fail("expected 'hyp' or 'theorem'");
    }
  }
  if (!result) throw Error(ErrorCode::SyntaxError, "missing 'theorem' line");
  return *result;
}

std::string render_theorem(const TheoremFile& theorem) {
  std::string out;
  for (const Hypothesis& h : theorem.hypotheses)
    out += "hyp " + h.label + " : " + render_formula(h.formula) + "\n";
  out += "theorem " + theorem.name + " : " + render_formula(theorem.goal) + "\n";
  return out;
}

// ---------------------------------------------------------------- scripts

Script parse_script(std::string_view text, SymbolTable* symbols) {
  SymbolTable local;
  Parser p(lex(text), symbols ? *symbols : local);
  Script script;
  while (!p.at_end()) {
    const Token start = p.peek();
    if (start.kind != Tok::Ident) p.fail("expected tactic");
    const std::string name = p.take().text;
    if (name == "intro") {
      script.push_back(tactic::Intro{});
    } else if (name == "split") {
      script.push_back(tactic::Split{});
    } else if (name == "left") {
      script.push_back(tactic::Left{});
    } else if (name == "right") {
      script.push_back(tactic::Right{});
    } else if (name == "trivial") {
      script.push_back(tactic::Trivial{});
    } else if (name == "exists") {
      script.push_back(tactic::Exists{p.term()});
    } else if (name == "apply") {
      tactic::Apply a{p.expect_ident(), std::nullopt};
      if (p.at_word("with")) {
        p.take();
        a.with = p.term();
      }
      script.push_back(std::move(a));
    } else if (name == "destruct") {
      script.push_back(tactic::Destruct{p.expect_ident()});
    } else if (name == "assert") {
      p.expect(Tok::LParen);
      tactic::Assert a{p.formula(), std::nullopt};
      p.expect(Tok::RParen);
      if (p.at_word("as")) {
        p.take();
        a.as = p.expect_ident();
      }
      script.push_back(std::move(a));
    } else if (name == "cut") {
      p.expect(Tok::LParen);
      tactic::Cut k{p.formula()};
      p.expect(Tok::RParen);
      script.push_back(std::move(k));
    } else {
      throw Error(ErrorCode::UnknownTactic, "unknown tactic '" + name + "'", start.line,
                  start.column);
    }
    p.expect(Tok::Dot);
  }
  return script;
}

std::string render_tactic(const Tactic& t) {
  struct Visitor {
    std::string operator()(const tactic::Intro&) const { return "intro."; }
    std::string operator()(const tactic::Split&) const { return "split."; }
    std::string operator()(const tactic::Left&) const { return "left."; }
    std::string operator()(const tactic::Right&) const { return "right."; }
    std::string operator()(const tactic::Trivial&) const { return "trivial."; }
    std::string operator()(const tactic::Exists& e) const {
      return "exists " + render_term(e.witness) + ".";
    }
    std::string operator()(const tactic::Apply& a) const {
      return "apply " + a.label + (a.with ? " with " + render_term(*a.with) : "") + ".";
    }
    std::string operator()(const tactic::Destruct& d) const { return "destruct " + d.label + "."; }
    std::string operator()(const tactic::Assert& a) const {
      return "assert (" + render_formula(a.lemma) + ")" + (a.as ? " as " + *a.as : "") + ".";
    }
    std::string operator()(const tactic::Cut& k) const {
      return "cut (" + render_formula(k.lemma) + ").";
    }
  };
  return std::visit(Visitor{}, t);
}

std::string render_script(const Script& script) {
  std::string out;
  for (const Tactic& t : script) out += render_tactic(t) + "\n";
  return out;
}

// ---------------------------------------------------------------- derivation files

DerivationFile parse_derivation(std::string_view text) {
  auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string_view::npos && text[first] == '{') return parse_derivation_json(text);
  return parse_derivation_text(text);
}

std::string render_derivation(const DerivationFile& file) {
  std::ostringstream out;
  for (const ContextAlias& a : file.aliases) {
    std::vector<std::string> fs;
    for (const Formula& f : a.formulas) fs.push_back(render_formula(f));
    out << "context " << a.name << " := " << join(fs, ", ") << "\n";
  }
  for (const Sequent& s : file.derivation.assumed) {
    std::string ctx = join(context_items(s, file.aliases), ", ");
    out << "assume " << ctx << (ctx.empty() ? "" : " ") << "|- "
        << render_formula(s.conclusion) << "\n";
  }
  const auto& lines = file.derivation.lines;
  std::vector<std::string> judgments;
  size_t width = 0;
  for (const DerivationLine& l : lines) {
    std::string ctx = join(context_items(l.sequent, file.aliases), ", ");
    judgments.push_back(ctx + (ctx.empty() ? "" : " ") + "|- " +
                        render_formula(l.sequent.conclusion));
    width = std::max(width, judgments.back().size());
  }
  const size_t index_width = std::to_string(lines.size()).size();
  for (size_t i = 0; i < lines.size(); ++i) {
    const Justification& j = lines[i].justification;
    std::string index = std::to_string(i + 1);
    out << index << std::string(index_width - index.size(), ' ') << " | " << judgments[i]
        << std::string(width - judgments[i].size(), ' ') << " | " << to_string(j.rule);
    if (!j.premises.empty()) {
      out << ' ';
      for (size_t k = 0; k < j.premises.size(); ++k) out << (k ? "," : "") << j.premises[k];
    }
    if (j.witness) out << ' ' << render_term(*j.witness);
    out << "\n";
  }
  return out.str();
}

std::string render_derivation(const Derivation& d) { return render_derivation(DerivationFile{{}, d}); }

std::string render_derivation_json(const DerivationFile& file) {
  json doc;
  doc["aliases"] = json::object();
  for (const ContextAlias& a : file.aliases) {
    json fs = json::array();
    for (const Formula& f : a.formulas) fs.push_back(render_formula(f));
    doc["aliases"][a.name] = fs;
  }
  doc["assumed"] = json::array();
  for (const Sequent& s : file.derivation.assumed)
    doc["assumed"].push_back(
        {{"context", context_items(s, file.aliases)}, {"conclusion", render_formula(s.conclusion)}});
  doc["lines"] = json::array();
  int index = 0;
  for (const DerivationLine& l : file.derivation.lines) {
    const Justification& j = l.justification;
    doc["lines"].push_back({
        {"index", ++index},
        {"context", context_items(l.sequent, file.aliases)},
        {"conclusion", render_formula(l.sequent.conclusion)},
        {"rule", std::string(to_string(j.rule))},
        {"premises", j.premises},
        {"witness", j.witness ? json(render_term(*j.witness)) : json(nullptr)},
    });
  }
  return doc.dump(2) + "\n";
}

std::string render_trace(const ReplayResult& result) {
  std::vector<std::string> rows;
  size_t width = 0;
  for (const GoalState& s : result.states) {
    rows.push_back(render_goals(s.goals(), true));
    width = std::max(width, rows.back().size());
  }
  const Script tactics = result.final_state().history();
  std::ostringstream out;
  const size_t index_width = std::to_string(rows.size()).size();
  for (size_t i = 0; i < rows.size(); ++i) {
    std::string index = std::to_string(i + 1);
    out << std::string(index_width - index.size(), ' ') << index << "  " << rows[i];
    if (i > 0) {
      std::string t = render_tactic(tactics[i - 1]);
      t.pop_back();
      out << std::string(width - rows[i].size(), ' ') << "    " << t;
    }
    out << "\n";
  }
  return out.str();
}

}  // namespace minilog
