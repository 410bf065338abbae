#include "relcat/parser.hpp"

#include <cctype>
#include <map>
#include <optional>
#include <vector>

namespace relcat::syntax {

namespace {

enum class Tok : uint8_t {
  Ident, Top, AddUnit, Wedge, Meet, Join, Arrow, Dot, Star,
  LParen, RParen, LBracket, RBracket, Comma, Equals, Question, End,
};

struct Token {
  Tok kind;
  std::string text;
  size_t pos;
};

bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool ident_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\'';
}

std::vector<Token> lex(std::string_view s) {
  std::vector<Token> out;
  size_t i = 0;
  auto match = [&](std::string_view lit) {
    return s.substr(i, lit.size()) == lit;
  };
  while (i < s.size()) {
    char c = s[i];
    if (c == ' ' || c == '\t' || c == '\n' || c == '\r') { ++i; continue; }
    size_t pos = i;
    if (ident_start(c)) {
      size_t j = i + 1;
      while (j < s.size() && ident_char(s[j])) ++j;
      std::string word(s.substr(i, j - i));
      i = j;
      if (word == "T") out.push_back({Tok::Top, word, pos});
      else if (word == "Ta") out.push_back({Tok::AddUnit, word, pos});
      else if (word == "x") out.push_back({Tok::Meet, word, pos});
      else out.push_back({Tok::Ident, word, pos});
      continue;
    }
    if (match("/\\")) { out.push_back({Tok::Wedge, "/\\", pos}); i += 2; continue; }
    if (match("->")) { out.push_back({Tok::Arrow, "->", pos}); i += 2; continue; }
    if (match("∧")) { out.push_back({Tok::Wedge, "∧", pos}); i += 3; continue; }
    if (match("→")) { out.push_back({Tok::Arrow, "→", pos}); i += 3; continue; }
    if (match("⊤ₐ")) { out.push_back({Tok::AddUnit, "⊤ₐ", pos}); i += 6; continue; }
    if (match("⊤")) { out.push_back({Tok::Top, "⊤", pos}); i += 3; continue; }
    if (match("⊓")) { out.push_back({Tok::Meet, "⊓", pos}); i += 3; continue; }
    if (match("⊔")) { out.push_back({Tok::Join, "⊔", pos}); i += 3; continue; }
    switch (c) {
      case '+': out.push_back({Tok::Join, "+", pos}); ++i; continue;
      case '.': out.push_back({Tok::Dot, ".", pos}); ++i; continue;
      case '*': out.push_back({Tok::Star, "*", pos}); ++i; continue;
      case '(': out.push_back({Tok::LParen, "(", pos}); ++i; continue;
      case ')': out.push_back({Tok::RParen, ")", pos}); ++i; continue;
      case '[': out.push_back({Tok::LBracket, "[", pos}); ++i; continue;
      case ']': out.push_back({Tok::RBracket, "]", pos}); ++i; continue;
      case ',': out.push_back({Tok::Comma, ",", pos}); ++i; continue;
      case '=': out.push_back({Tok::Equals, "=", pos}); ++i; continue;
      case '?': out.push_back({Tok::Question, "?", pos}); ++i; continue;
      default:
        throw ParseError("unexpected character '" + std::string(1, c) + "'", pos);
    }
  }
  out.push_back({Tok::End, "", s.size()});
  return out;
}

class Parser {
 public:
  explicit Parser(std::string_view text) : toks_(lex(text)) {}

  Formula formula_all() {
    Formula f = formula();
    expect(Tok::End, "trailing input after formula");
    return f;
  }

  ArrowTerm term_all() {
    ArrowTerm t = comp();
    expect(Tok::End, "trailing input after term");
    return t;
  }

  Equation equation_all() {
    ArrowTerm lhs = comp();
    expect(Tok::Equals, "expected '=' between equation sides");
    ArrowTerm rhs = comp();
    expect(Tok::End, "trailing input after equation");
    return Equation(std::move(lhs), std::move(rhs));
  }

 private:
  std::vector<Token> toks_;
  size_t at_ = 0;

  const Token& peek() const { return toks_[at_]; }
  Token next() { return toks_[at_++]; }
  bool accept(Tok k) {
    if (peek().kind != k) return false;
    ++at_;
    return true;
  }
  void expect(Tok k, const char* msg) {
    if (!accept(k)) throw ParseError(msg, peek().pos);
  }

  Formula formula() {  // '->' level, right-associative
    Formula left = join_level();
    if (accept(Tok::Arrow)) return Formula::impl(std::move(left), formula());
    return left;
  }

  Formula join_level() {
    Formula left = meet_level();
    if (accept(Tok::Join)) {
      Formula right = meet_level();
      if (peek().kind == Tok::Join)
        throw ParseError("'+' is non-associative, parenthesize", peek().pos);
      return Formula::coprod(std::move(left), std::move(right));
    }
    return left;
  }

  Formula meet_level() {
    Formula left = wedge_level();
    if (accept(Tok::Meet)) {
      Formula right = wedge_level();
      if (peek().kind == Tok::Meet)
        throw ParseError("'x' is non-associative, parenthesize", peek().pos);
      return Formula::prod(std::move(left), std::move(right));
    }
    return left;
  }

  Formula wedge_level() {
    Formula left = atom();
    if (accept(Tok::Wedge)) {
      Formula right = atom();
      if (peek().kind == Tok::Wedge)
        throw ParseError("'/\\' is non-associative, parenthesize", peek().pos);
      return Formula::conj(std::move(left), std::move(right));
    }
    return left;
  }

  Formula atom() {
    const Token& t = peek();
    switch (t.kind) {
      case Tok::Ident: return Formula::letter(next().text);
      case Tok::Top: next(); return Formula::top();
      case Tok::AddUnit: next(); return Formula::add_unit();
      case Tok::LParen: {
        next();
        Formula f = formula();
        expect(Tok::RParen, "expected ')'");
        return f;
      }
      default:
        throw ParseError("expected a formula", t.pos);
    }
  }

  ArrowTerm comp() {  // '.' level, right-associative
    ArrowTerm left = tens();
    if (accept(Tok::Dot)) return ArrowTerm::comp(std::move(left), comp());
    return left;
  }

  ArrowTerm tens() {
    ArrowTerm left = term_atom();
    if (accept(Tok::Star)) {
      ArrowTerm right = term_atom();
      if (peek().kind == Tok::Star)
        throw ParseError("'*' is non-associative, parenthesize", peek().pos);
      return ArrowTerm::tens(std::move(left), std::move(right));
    }
    return left;
  }

  std::vector<Formula> bracket_args(size_t arity, const std::string& prim, size_t pos) {
    expect(Tok::LBracket, "expected '['");
    std::vector<Formula> args;
    args.push_back(formula());
    while (accept(Tok::Comma)) args.push_back(formula());
    expect(Tok::RBracket, "expected ']'");
    if (args.size() != arity)
      throw ParseError(prim + " takes " + std::to_string(arity) +
                           " formula argument(s), got " + std::to_string(args.size()),
                       pos);
    return args;
  }

  ArrowTerm term_atom() {
    const Token& t = peek();
    if (t.kind == Tok::Ident) {
      Token name = next();
      const std::string& p = name.text;
      auto args1 = [&]() { return bracket_args(1, p, name.pos); };
      auto args2 = [&]() { return bracket_args(2, p, name.pos); };
      auto args3 = [&]() { return bracket_args(3, p, name.pos); };
      if (p == "id") { auto a = args1(); return ArrowTerm::id(a[0]); }
      if (p == "bR") { auto a = args3(); return ArrowTerm::assoc_r(a[0], a[1], a[2]); }
      if (p == "bL") { auto a = args3(); return ArrowTerm::assoc_l(a[0], a[1], a[2]); }
      if (p == "c") { auto a = args2(); return ArrowTerm::sym(a[0], a[1]); }
      if (p == "dR") { auto a = args1(); return ArrowTerm::unit_r(a[0]); }
      if (p == "dL") { auto a = args1(); return ArrowTerm::unit_l(a[0]); }
      if (p == "w") { auto a = args1(); return ArrowTerm::diag(a[0]); }
      if (p == "eps") { auto a = args2(); return ArrowTerm::eps(a[0], a[1]); }
      if (p == "eta") { auto a = args2(); return ArrowTerm::eta(a[0], a[1]); }
      if (p == "p1") { auto a = args2(); return ArrowTerm::proj1(a[0], a[1]); }
      if (p == "p2") { auto a = args2(); return ArrowTerm::proj2(a[0], a[1]); }
      if (p == "i1") { auto a = args2(); return ArrowTerm::inj1(a[0], a[1]); }
      if (p == "i2") { auto a = args2(); return ArrowTerm::inj2(a[0], a[1]); }
      if (p == "term") { auto a = args1(); return ArrowTerm::to_terminal(a[0]); }
      if (p == "init") { auto a = args1(); return ArrowTerm::from_initial(a[0]); }
      if (p == "pair" || p == "copair") {
        expect(Tok::LParen, "expected '('");
        ArrowTerm f = comp();
        expect(Tok::Comma, "expected ','");
        ArrowTerm g = comp();
        expect(Tok::RParen, "expected ')'");
        return p == "pair" ? ArrowTerm::pair(std::move(f), std::move(g))
                           : ArrowTerm::copair(std::move(f), std::move(g));
      }
      throw ParseError("unknown primitive '" + p + "'", name.pos);
    }
    if (t.kind == Tok::Question) {
      next();
      if (peek().kind != Tok::Ident)
        throw ParseError("expected a hole name after '?'", peek().pos);
      Token name = next();
      auto a = bracket_args(2, "?" + name.text, name.pos);
      return ArrowTerm::hole(name.text, {a[0], a[1]});
    }
    if (t.kind == Tok::LParen) {
      next();
      // Either the hom functor '(A -> term)' or a parenthesized term; try the
      // hom reading first and fall back on failure.
      size_t save = at_;
      try {
        // The formula argument is parsed below the '->' level so the arrow
        // separating it from the term is unambiguous; implications in the
        // argument need their own parens.
        Formula a = join_level();
        if (accept(Tok::Arrow)) {
          ArrowTerm f = comp();
          expect(Tok::RParen, "expected ')'");
          return ArrowTerm::hom_fun(std::move(a), std::move(f));
        }
      } catch (const ParseError&) {
      }
      at_ = save;
      ArrowTerm inner = comp();
      expect(Tok::RParen, "expected ')'");
      return inner;
    }
    throw ParseError("expected an arrow term", t.pos);
  }
};

}  // namespace

Formula parse_formula(std::string_view text) { return Parser(text).formula_all(); }

ArrowTerm parse_arrow_term(std::string_view text) { return Parser(text).term_all(); }

Equation parse_equation(std::string_view text) { return Parser(text).equation_all(); }

}  // namespace relcat::syntax
