// Copyright 2026 The inetcalc Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "inet/parser.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <set>
#include <sstream>

#include "inet/validate.hpp"

namespace inet {

std::string format_diagnostic(const Diagnostic& d) {
  return std::to_string(d.span.line) + ":" + std::to_string(d.span.column) +
         ": " + d.message;
}

namespace {

std::string join_diagnostics(const std::vector<Diagnostic>& ds) {
  std::string out;
  for (const Diagnostic& d : ds) {
    if (!out.empty()) out += "\n";
    out += format_diagnostic(d);
  }
  return out;
}

}  // namespace

ParseError::ParseError(std::vector<Diagnostic> diagnostics)
    : std::runtime_error(join_diagnostics(diagnostics)),
      diagnostics_(std::move(diagnostics)) {
  if (diagnostics_.empty()) diagnostics_.push_back({{}, "parse error"});
}

namespace {

// ---------------------------------------------------------------------------
// Lexer

enum class Tok {
  kIdent,
  kName,
  kNat,
  kNumeral,
  kLBrace,
  kRBrace,
  kLParen,
  kRParen,
  kLBrack,
  kRBrack,
  kComma,
  kSlash,
  kAt,
  kSemi,
  kEq,
  kLt,
  kGt,
  kBar,
  kBowtie,
  kEnd,
};

const char* tok_text(Tok t) {
  switch (t) {
    case Tok::kIdent: return "symbol";
    case Tok::kName: return "name";
    case Tok::kNat: return "number";
    case Tok::kNumeral: return "numeral";
    case Tok::kLBrace: return "'{'";
    case Tok::kRBrace: return "'}'";
    case Tok::kLParen: return "'('";
    case Tok::kRParen: return "')'";
    case Tok::kLBrack: return "'['";
    case Tok::kRBrack: return "']'";
    case Tok::kComma: return "','";
    case Tok::kSlash: return "'/'";
    case Tok::kAt: return "'@'";
    case Tok::kSemi: return "';'";
    case Tok::kEq: return "'='";
    case Tok::kLt: return "'<'";
    case Tok::kGt: return "'>'";
    case Tok::kBar: return "'|'";
    case Tok::kBowtie: return "'><'";
    case Tok::kEnd: return "end of input";
  }
  return "token";
}

struct Token {
  Tok kind;
  std::string text;
  SourceSpan span;
};

constexpr long kMaxNumeral = 100000;

bool ident_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\'';
}

std::vector<Token> lex(std::string_view src, const ParseOptions& options) {
  std::vector<Token> out;
  std::size_t i = 0;
  int line = 1, col = 1;
  auto advance = [&](std::size_t n) {
    for (std::size_t k = 0; k < n && i < src.size(); ++k, ++i) {
      if (src[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
  };
  auto fail = [&](int l, int c, std::size_t len, std::string msg) {
    throw ParseError({{{l, c, l, c + static_cast<int>(len)}, std::move(msg)}});
  };

  while (i < src.size()) {
    char c = src[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      advance(1);
      continue;
    }
    int l = line, cl = col;
    auto emit = [&](Tok kind, std::size_t len) {
      out.push_back({kind, std::string(src.substr(i, len)),
                     {l, cl, l, cl + static_cast<int>(len)}});
      advance(len);
    };
    if (c == '#') {
      if (i + 1 < src.size() && std::isdigit(static_cast<unsigned char>(src[i + 1]))) {
        std::size_t j = i + 1;
        while (j < src.size() && std::isdigit(static_cast<unsigned char>(src[j]))) ++j;
        std::string digits(src.substr(i + 1, j - i - 1));
        if (digits.size() > 6 || std::stol(digits) > kMaxNumeral) {
          fail(l, cl, j - i, "numeral #" + digits + " is too large");
        }
        emit(Tok::kNumeral, j - i);
        continue;
      }
      while (i < src.size() && src[i] != '\n') advance(1);
      continue;
    }
    if (std::isupper(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      while (j < src.size() && ident_char(src[j])) ++j;
      emit(Tok::kIdent, j - i);
      continue;
    }
    if (std::islower(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      while (j < src.size() && ident_char(src[j])) ++j;
      emit(Tok::kName, j - i);
      continue;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      while (j < src.size() && std::isdigit(static_cast<unsigned char>(src[j]))) ++j;
      if (j < src.size() && ident_char(src[j])) {
        while (j < src.size() && ident_char(src[j])) ++j;
        fail(l, cl, j - i,
             "'" + std::string(src.substr(i, j - i)) +
                 "': names and symbols may not start with a digit");
      }
      emit(Tok::kNat, j - i);
      continue;
    }
    if (c == '%') {
      std::size_t j = i + 1;
      while (j < src.size() && ident_char(src[j])) ++j;
      std::string_view word = src.substr(i, j - i);
      bool digits = word.size() > 1 &&
                    std::all_of(word.begin() + 1, word.end(), [](char d) {
                      return std::isdigit(static_cast<unsigned char>(d));
                    });
      if (!options.allow_generated_names || !digits) {
        fail(l, cl, j - i,
             "'" + std::string(word) +
                 "': names beginning with '%' are reserved for generated names");
      }
      emit(Tok::kName, j - i);
      continue;
    }
    switch (c) {
      case '{': emit(Tok::kLBrace, 1); continue;
      case '}': emit(Tok::kRBrace, 1); continue;
      case '(': emit(Tok::kLParen, 1); continue;
      case ')': emit(Tok::kRParen, 1); continue;
      case '[': emit(Tok::kLBrack, 1); continue;
      case ']': emit(Tok::kRBrack, 1); continue;
      case ',': emit(Tok::kComma, 1); continue;
      case '/': emit(Tok::kSlash, 1); continue;
      case '@': emit(Tok::kAt, 1); continue;
      case ';': emit(Tok::kSemi, 1); continue;
      case '=': emit(Tok::kEq, 1); continue;
      case '<': emit(Tok::kLt, 1); continue;
      case '|': emit(Tok::kBar, 1); continue;
      case '>':
        if (i + 1 < src.size() && src[i + 1] == '<') {
          emit(Tok::kBowtie, 2);
        } else {
          emit(Tok::kGt, 1);
        }
        continue;
      default:
        fail(l, cl, 1, std::string("unexpected character '") + c + "'");
    }
  }
  out.push_back({Tok::kEnd, "", {line, col, line, col}});
  return out;
}

// ---------------------------------------------------------------------------
// Syntax trees

struct RawTerm {
  enum Kind { kName, kAgent, kNumeral, kList } kind = kName;
  std::string label;
  long numeral = 0;
  std::vector<RawTerm> args;
  SourceSpan span;
};

struct RawEquation {
  RawTerm left, right;
};

struct RawConfig {
  std::vector<RawTerm> head;
  std::vector<RawEquation> equations;
  SourceSpan span;
};

struct RawSide {
  std::string symbol;
  SourceSpan span;
  std::vector<RawTerm> args;
};

struct RawRule {
  RawSide a, b;
  SourceSpan span;
};

struct RawSymbol {
  std::string name;
  int arity;
  Attribute attribute;
  SourceSpan span;
};

struct RawNet {
  std::string name;
  SourceSpan name_span;
  RawConfig config;
};

SourceSpan join(const SourceSpan& a, const SourceSpan& b) {
  return {a.line, a.column, b.end_line, b.end_column};
}

class Parser {
 public:
  explicit Parser(std::vector<Token> tokens) : toks_(std::move(tokens)) {}

  void system(std::vector<RawSymbol>& symbols, std::vector<RawRule>& rules,
              std::vector<RawNet>& nets) {
    while (peek().kind != Tok::kEnd) {
      const Token& kw = peek();
      if (kw.kind == Tok::kName && kw.text == "agents") {
        next();
        expect(Tok::kLBrace);
        if (peek().kind != Tok::kRBrace) {
          symbols.push_back(symbol());
          while (accept(Tok::kComma)) symbols.push_back(symbol());
        }
        expect(Tok::kRBrace);
      } else if (kw.kind == Tok::kName && kw.text == "rules") {
        next();
        expect(Tok::kLBrace);
        while (peek().kind != Tok::kRBrace) rules.push_back(rule());
        expect(Tok::kRBrace);
      } else if (kw.kind == Tok::kName && kw.text == "net") {
        next();
        const Token& name = peek();
        if (name.kind != Tok::kIdent && name.kind != Tok::kName) {
          error(name, "expected a net name");
        }
        next();
        expect(Tok::kEq);
        nets.push_back({name.text, name.span, config()});
      } else {
        error(kw, "expected 'agents', 'rules' or 'net'");
      }
    }
  }

  RawConfig config_only() {
    RawConfig c = config();
    expect(Tok::kEnd);
    return c;
  }

  RawTerm term_only() {
    RawTerm t = term();
    expect(Tok::kEnd);
    return t;
  }

 private:
  const Token& peek() const { return toks_[pos_]; }
  const Token& next() {
    const Token& t = toks_[pos_];
    if (pos_ + 1 < toks_.size()) ++pos_;
    return t;
  }
  const Token& last() const { return toks_[pos_ == 0 ? 0 : pos_ - 1]; }
  bool accept(Tok k) {
    if (peek().kind != k) return false;
    next();
    return true;
  }
  [[noreturn]] void error(const Token& t, const std::string& msg) {
    std::string found = t.kind == Tok::kEnd ? "end of input" : "'" + t.text + "'";
    throw ParseError({{t.span, msg + ", found " + found}});
  }
  const Token& expect(Tok k) {
    if (peek().kind != k) error(peek(), std::string("expected ") + tok_text(k));
    return next();
  }

  RawSymbol symbol() {
    const Token& name = expect(Tok::kIdent);
    expect(Tok::kSlash);
    const Token& nat = expect(Tok::kNat);
    if (nat.text.size() > 4) error(nat, "arity is too large");
    RawSymbol s{name.text, std::stoi(nat.text), Attribute::kPlain,
                join(name.span, nat.span)};
    if (accept(Tok::kAt)) {
      const Token& attr = peek();
      if (attr.kind == Tok::kName && attr.text == "eraser") {
        s.attribute = Attribute::kEraser;
      } else if (attr.kind == Tok::kName && attr.text == "duplicator") {
        s.attribute = Attribute::kDuplicator;
      } else if (attr.kind == Tok::kName && attr.text == "amb") {
        s.attribute = Attribute::kAmb;
      } else {
        error(attr, "expected 'eraser', 'duplicator' or 'amb' after '@'");
      }
      next();
      s.span = join(s.span, attr.span);
    }
    return s;
  }

  RawSide side() {
    const Token& sym = expect(Tok::kIdent);
    RawSide s{sym.text, sym.span, {}};
    if (accept(Tok::kLBrack)) {
      if (peek().kind != Tok::kRBrack) s.args = terms();
      expect(Tok::kRBrack);
    }
    return s;
  }

  RawRule rule() {
    RawRule r;
    r.a = side();
    expect(Tok::kBowtie);
    r.b = side();
    const Token& semi = expect(Tok::kSemi);
    r.span = join(r.a.span, semi.span);
    return r;
  }

  RawConfig config() {
    RawConfig c;
    const Token& open = expect(Tok::kLt);
    if (peek().kind != Tok::kBar) c.head = terms();
    expect(Tok::kBar);
    if (peek().kind != Tok::kGt) {
      c.equations.push_back(equation());
      while (accept(Tok::kComma)) c.equations.push_back(equation());
    }
    const Token& close = expect(Tok::kGt);
    c.span = join(open.span, close.span);
    return c;
  }

  RawEquation equation() {
    RawEquation e;
    e.left = term();
    expect(Tok::kEq);
    e.right = term();
    return e;
  }

  std::vector<RawTerm> terms() {
    std::vector<RawTerm> out;
    out.push_back(term());
    while (accept(Tok::kComma)) out.push_back(term());
    return out;
  }

  RawTerm term() {
    const Token& t = peek();
    RawTerm r;
    r.span = t.span;
    switch (t.kind) {
      case Tok::kName:
        next();
        r.kind = RawTerm::kName;
        r.label = t.text;
        return r;
      case Tok::kNumeral:
        next();
        r.kind = RawTerm::kNumeral;
        r.numeral = std::stol(t.text.substr(1));
        return r;
      case Tok::kIdent:
        next();
        r.kind = RawTerm::kAgent;
        r.label = t.text;
        if (accept(Tok::kLParen)) {
          if (peek().kind != Tok::kRParen) r.args = terms();
          r.span = join(r.span, expect(Tok::kRParen).span);
        }
        return r;
      case Tok::kLBrack:
        next();
        r.kind = RawTerm::kList;
        if (peek().kind != Tok::kRBrack) r.args = terms();
        r.span = join(r.span, expect(Tok::kRBrack).span);
        return r;
      default:
        error(t, "expected a term");
    }
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
};

// ---------------------------------------------------------------------------
// Resolution against a signature

constexpr std::string_view kHolePrefix = "%hole";

Term map_names(const Term& t,
               const std::function<std::string(const std::string&)>& f) {
  if (t.is_name()) return Term::name(f(t.label()));
  std::vector<Term> args;
  args.reserve(t.arity());
  for (const Term& a : t.args()) args.push_back(map_names(a, f));
  return Term::agent(t.label(), std::move(args));
}

// Converts the syntax trees of one rule or configuration, recording name
// occurrences so linearity problems can be reported where they happen.
class Resolver {
 public:
  Resolver(const Signature& sig, std::vector<Diagnostic>& diags)
      : sig_(sig), diags_(diags) {}

  Term term(const RawTerm& r) {
    switch (r.kind) {
      case RawTerm::kName:
        occurrences_[r.label].push_back(r.span);
        return Term::name(r.label);
      case RawTerm::kNumeral: {
        if (sig_.arity("Z") != 0 || sig_.arity("S") != 1) {
          diags_.push_back({r.span, "numeral sugar requires symbols Z/0 and S/1"});
        }
        Term t = Term::agent("Z");
        for (long k = 0; k < r.numeral; ++k) t = Term::agent("S", {t});
        return t;
      }
      case RawTerm::kList: {
        if (sig_.arity("Diff") != 2 || sig_.arity("Cons") != 2) {
          diags_.push_back({r.span, "list sugar requires symbols Diff/2 and Cons/2"});
        }
        std::string hole = std::string(kHolePrefix) + std::to_string(holes_++);
        Term tail = Term::name(hole);
        for (auto it = r.args.rbegin(); it != r.args.rend(); ++it) {
          tail = Term::agent("Cons", {term(*it), tail});
        }
        return Term::agent("Diff", {tail, Term::name(hole)});
      }
      case RawTerm::kAgent:
        break;
    }
    const SymbolInfo* info = sig_.find(r.label);
    if (!info) {
      diags_.push_back({r.span, "undeclared symbol '" + r.label + "'"});
    } else if (static_cast<std::size_t>(info->arity) != r.args.size()) {
      diags_.push_back({r.span, "symbol '" + r.label + "' has arity " +
                                    std::to_string(info->arity) + " but " +
                                    std::to_string(r.args.size()) +
                                    " arguments were given"});
    }
    std::vector<Term> args;
    for (const RawTerm& a : r.args) args.push_back(term(a));
    return Term::agent(r.label, std::move(args));
  }

  const std::map<std::string, std::vector<SourceSpan>>& occurrences() const {
    return occurrences_;
  }

  // Gives list holes legal names that do not clash with user names.
  std::function<std::string(const std::string&)> hole_renamer() {
    std::map<std::string, std::string> mapping;
    int k = 0;
    for (int h = 0; h < holes_; ++h) {
      std::string fresh;
      do {
        fresh = "h" + std::to_string(k++);
      } while (occurrences_.count(fresh) != 0);
      mapping[std::string(kHolePrefix) + std::to_string(h)] = fresh;
    }
    return [mapping](const std::string& x) {
      auto it = mapping.find(x);
      return it == mapping.end() ? x : it->second;
    };
  }

  bool has_holes() const { return holes_ > 0; }

 private:
  const Signature& sig_;
  std::vector<Diagnostic>& diags_;
  std::map<std::string, std::vector<SourceSpan>> occurrences_;
  int holes_ = 0;
};

Configuration resolve_config(const RawConfig& raw, const Signature& sig,
                             std::vector<Diagnostic>& diags) {
  Resolver res(sig, diags);
  Configuration c;
  for (const RawTerm& t : raw.head) c.head.push_back(res.term(t));
  for (const RawEquation& e : raw.equations) {
    Term l = res.term(e.left);
    Term r = res.term(e.right);
    c.equations.push_back({l, r});
  }
  for (const auto& [name, spans] : res.occurrences()) {
    if (spans.size() > 2) {
      diags.push_back({spans[2], "name " + name + " occurs " +
                                     std::to_string(spans.size()) +
                                     " times (at most 2 allowed)"});
    }
  }
  if (res.has_holes()) {
    auto f = res.hole_renamer();
    for (Term& t : c.head) t = map_names(t, f);
    for (Equation& e : c.equations) {
      e.left = map_names(e.left, f);
      e.right = map_names(e.right, f);
    }
  }
  return c;
}

Rule resolve_rule(const RawRule& raw, const Signature& sig,
                  std::vector<Diagnostic>& diags) {
  Resolver res(sig, diags);
  Rule r{raw.a.symbol, raw.b.symbol, {}, {}};
  for (const RawSide* s : {&raw.a, &raw.b}) {
    const SymbolInfo* info = sig.find(s->symbol);
    if (!info) {
      diags.push_back({s->span, "undeclared symbol '" + s->symbol + "'"});
    } else {
      if (info->attribute == Attribute::kAmb) {
        diags.push_back({s->span, "amb symbol '" + s->symbol +
                                      "' interacts through built-in rules only"});
      }
      if (static_cast<std::size_t>(info->arity) != s->args.size()) {
        diags.push_back({s->span, "symbol '" + s->symbol + "' has arity " +
                                      std::to_string(info->arity) + " but " +
                                      std::to_string(s->args.size()) +
                                      " right-hand terms were given"});
      }
    }
  }
  for (const RawTerm& t : raw.a.args) r.rhs_a.push_back(res.term(t));
  for (const RawTerm& t : raw.b.args) r.rhs_b.push_back(res.term(t));
  for (const auto& [name, spans] : res.occurrences()) {
    if (spans.size() != 2) {
      diags.push_back({spans.size() > 2 ? spans[2] : spans[0],
                       "linearity violation: name " + name + " occurs " +
                           std::to_string(spans.size()) +
                           " time(s); every rule name must occur exactly twice"});
    }
  }
  if (res.has_holes()) {
    auto f = res.hole_renamer();
    for (Term& t : r.rhs_a) t = map_names(t, f);
    for (Term& t : r.rhs_b) t = map_names(t, f);
  }
  return r;
}

std::string join_terms(const std::vector<Term>& ts) {
  std::string out;
  for (std::size_t i = 0; i < ts.size(); ++i) {
    if (i) out += ", ";
    out += print_term(ts[i]);
  }
  return out;
}

std::string print_side(const std::string& symbol, const std::vector<Term>& args) {
  if (args.empty()) return symbol;
  return symbol + "[" + join_terms(args) + "]";
}

}  // namespace

SystemFile parse_system(std::string_view text, const ParseOptions& options) {
  Parser p(lex(text, options));
  std::vector<RawSymbol> symbols;
  std::vector<RawRule> rules;
  std::vector<RawNet> nets;
  p.system(symbols, rules, nets);

  std::vector<Diagnostic> diags;
  SystemFile out;
  std::map<std::string, SourceSpan> declared_at;
  for (const RawSymbol& s : symbols) {
    auto result = out.signature.declare(s.name, s.arity, s.attribute);
    if (result == Signature::DeclareResult::kConflict) {
      diags.push_back({s.span, "symbol '" + s.name +
                                   "' redeclared with a different arity or attribute"});
    }
    declared_at.emplace(s.name, s.span);
  }
  for (const Violation& v : validate_signature(out.signature)) {
    SourceSpan span;
    if (v.location.rfind("symbol ", 0) == 0) {
      auto it = declared_at.find(v.location.substr(7));
      if (it != declared_at.end()) span = it->second;
    } else if (!symbols.empty()) {
      span = symbols.back().span;
    }
    diags.push_back({span, v.message});
  }

  std::map<SymbolPair, SourceSpan> rule_at;
  for (const RawRule& raw : rules) {
    Rule r = resolve_rule(raw, out.signature, diags);
    SymbolPair key = pair_key(r.lhs_a, r.lhs_b);
    auto [it, fresh] = rule_at.emplace(key, raw.span);
    if (!fresh) {
      diags.push_back({raw.span, "duplicate rule for the pair " + key.first +
                                     " >< " + key.second});
      diags.push_back({it->second, "first rule for " + key.first + " >< " +
                                       key.second + " is here"});
      continue;
    }
    out.rules.add(std::move(r));
  }

  for (const RawNet& net : nets) {
    Configuration c = resolve_config(net.config, out.signature, diags);
    if (!out.nets.emplace(net.name, std::move(c)).second) {
      diags.push_back({net.name_span, "duplicate net '" + net.name + "'"});
    }
  }

  if (!diags.empty()) throw ParseError(std::move(diags));
  if (options.install_schemas) out.rules.install_schemas(out.signature);
  return out;
}

Configuration parse_configuration(std::string_view text,
                                  const Signature& signature,
                                  const ParseOptions& options) {
  Parser p(lex(text, options));
  RawConfig raw = p.config_only();
  std::vector<Diagnostic> diags;
  Configuration c = resolve_config(raw, signature, diags);
  if (!diags.empty()) throw ParseError(std::move(diags));
  return c;
}

Term parse_term(std::string_view text, const Signature& signature,
                const ParseOptions& options) {
  Parser p(lex(text, options));
  RawTerm raw = p.term_only();
  std::vector<Diagnostic> diags;
  RawConfig wrapper;
  wrapper.head.push_back(raw);
  Configuration c = resolve_config(wrapper, signature, diags);
  if (!diags.empty()) throw ParseError(std::move(diags));
  return c.head.front();
}

// ---------------------------------------------------------------------------
// Printing

std::string print_term(const Term& t) {
  if (t.is_name() || t.arity() == 0) return t.label();
  return t.label() + "(" + join_terms(t.args()) + ")";
}

std::string print_equation(const Equation& e) {
  std::string l = print_term(e.left);
  std::string r = print_term(e.right);
  if (r < l) std::swap(l, r);
  return l + " = " + r;
}

Configuration canonical(const Configuration& c) {
  std::vector<std::pair<std::string, Equation>> keyed;
  for (const Equation& e : c.equations) {
    std::string l = print_term(e.left);
    std::string r = print_term(e.right);
    Equation oriented = r < l ? Equation{e.right, e.left} : e;
    keyed.emplace_back(print_equation(e), oriented);
  }
  std::stable_sort(keyed.begin(), keyed.end(),
                   [](const auto& a, const auto& b) { return a.first < b.first; });
  Configuration out{c.head, {}};
  for (auto& [key, e] : keyed) out.equations.push_back(std::move(e));
  return out;
}

std::string print_configuration(const Configuration& c) {
  std::vector<std::string> eqs;
  for (const Equation& e : c.equations) eqs.push_back(print_equation(e));
  std::sort(eqs.begin(), eqs.end());
  std::string out = "< ";
  out += join_terms(c.head);
  if (!c.head.empty()) out += " ";
  out += "|";
  for (std::size_t i = 0; i < eqs.size(); ++i) {
    out += i ? ", " : " ";
    out += eqs[i];
  }
  out += " >";
  return out;
}

std::string print_rule(const Rule& r) {
  return print_side(r.lhs_a, r.rhs_a) + " >< " + print_side(r.lhs_b, r.rhs_b);
}

Configuration legalize_names(const Configuration& c) {
  NameCounts used = names_of(c);
  std::map<std::string, std::string> mapping;
  int k = 0;
  for (const auto& [name, count] : used) {
    if (!is_reserved_name(name)) continue;
    std::string fresh;
    do {
      fresh = "g" + std::to_string(k++);
    } while (used.count(fresh) != 0);
    mapping[name] = fresh;
  }
  if (mapping.empty()) return c;
  auto f = [&](const std::string& x) {
    auto it = mapping.find(x);
    return it == mapping.end() ? x : it->second;
  };
  Configuration out;
  for (const Term& t : c.head) out.head.push_back(map_names(t, f));
  for (const Equation& e : c.equations) {
    out.equations.push_back({map_names(e.left, f), map_names(e.right, f)});
  }
  return out;
}

std::string print_system(const SystemFile& s) {
  std::ostringstream out;
  out << "agents {";
  bool first = true;
  for (const auto& [name, info] : s.signature.symbols()) {
    out << (first ? "\n  " : ",\n  ") << name << "/" << info.arity;
    if (info.attribute != Attribute::kPlain) {
      out << " @" << attribute_name(info.attribute);
    }
    first = false;
  }
  out << "\n}\n";
  out << "rules {\n";
  for (const auto& [key, rule] : s.rules.explicit_rules()) {
    out << "  " << print_rule(rule) << ";\n";
  }
  out << "}\n";
  for (const auto& [name, config] : s.nets) {
    out << "net " << name << " = " << print_configuration(legalize_names(config))
        << "\n";
  }
  return out.str();
}

}  // namespace inet
