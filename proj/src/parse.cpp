/*
 * Copyright (c) 2026 The hykeep authors
 *
 * SPDX-License-Identifier: Apache-2.0
 */
#include "hykeep/parse.hpp"

#include <cctype>

namespace hykeep {

namespace {

enum class Tok { End, Num, Ident, Plus, Minus, Star, Slash, Caret, LParen, RParen,
                 Lt, Le, Gt, Ge, Eq, Ne, Amp, Pipe, Bang };

struct Token {
  Tok kind;
  std::string text;
};

class Lexer {
 public:
  explicit Lexer(const std::string& s) : s_(s) { advance(); }

  const Token& peek() const { return tok_; }
  Token take() {
    Token t = tok_;
    advance();
    return t;
  }
  size_t mark() const { return before_; }
  void rewind(size_t pos) {
    pos_ = pos;
    advance();
  }

 private:
  void advance() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    before_ = pos_;
    if (pos_ >= s_.size()) {
      tok_ = {Tok::End, ""};
      return;
    }
    char c = s_[pos_];
    auto two = [&](char n) { return pos_ + 1 < s_.size() && s_[pos_ + 1] == n; };
    switch (c) {
      case '+': tok_ = {Tok::Plus, "+"}; ++pos_; return;
      case '-': tok_ = {Tok::Minus, "-"}; ++pos_; return;
      case '*': tok_ = {Tok::Star, "*"}; ++pos_; return;
      case '/': tok_ = {Tok::Slash, "/"}; ++pos_; return;
      case '^': tok_ = {Tok::Caret, "^"}; ++pos_; return;
      case '(': tok_ = {Tok::LParen, "("}; ++pos_; return;
      case ')': tok_ = {Tok::RParen, ")"}; ++pos_; return;
      case '&': tok_ = {Tok::Amp, "&"}; ++pos_; return;
      case '|': tok_ = {Tok::Pipe, "|"}; ++pos_; return;
      case '<':
        if (two('=')) { tok_ = {Tok::Le, "<="}; pos_ += 2; } else { tok_ = {Tok::Lt, "<"}; ++pos_; }
        return;
      case '>':
        if (two('=')) { tok_ = {Tok::Ge, ">="}; pos_ += 2; } else { tok_ = {Tok::Gt, ">"}; ++pos_; }
        return;
      case '=':
        if (two('=')) pos_ += 2; else ++pos_;
        tok_ = {Tok::Eq, "="};
        return;
      case '!':
        if (two('=')) { tok_ = {Tok::Ne, "!="}; pos_ += 2; } else { tok_ = {Tok::Bang, "!"}; ++pos_; }
        return;
      default:
        break;
    }
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
      size_t start = pos_;
      while (pos_ < s_.size() &&
             (std::isdigit(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '.'))
        ++pos_;
      tok_ = {Tok::Num, s_.substr(start, pos_ - start)};
      return;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      size_t start = pos_;
      while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) ||
                                  s_[pos_] == '_'))
        ++pos_;
      tok_ = {Tok::Ident, s_.substr(start, pos_ - start)};
      return;
    }
    throw ParseError("unexpected character '" + std::string(1, c) + "'");
  }

  const std::string& s_;
  size_t pos_ = 0;
  size_t before_ = 0;
  Token tok_{Tok::End, ""};
};

Rational parse_number(const std::string& text) {
  auto dot = text.find('.');
  if (dot == std::string::npos) return rat_from_string(text);
  std::string digits = text.substr(0, dot) + text.substr(dot + 1);
  size_t frac_digits = text.size() - dot - 1;
  if (digits.empty()) throw ParseError("bad number literal: " + text);
  Rational num = rat_from_string(digits.empty() ? "0" : digits);
  Rational den(1);
  for (size_t i = 0; i < frac_digits; ++i) den *= 10;
  Rational q = num / den;
  q.canonicalize();
  return q;
}

class Parser {
 public:
  Parser(const std::string& text, VarsPtr vars) : lex_(text), vars_(std::move(vars)) {}

  ExprPtr expr() {
    ExprPtr e = sum();
    return e;
  }

  ExprPtr full_expr() {
    ExprPtr e = sum();
    expect_end();
    return e;
  }

  SemialgSet full_set() {
    SemialgSet s = set_or();
    expect_end();
    return s;
  }

 private:
  void expect_end() {
    if (lex_.peek().kind != Tok::End)
      throw ParseError("trailing input at '" + lex_.peek().text + "'");
  }

  void expect(Tok t, const char* what) {
    if (lex_.peek().kind != t) throw ParseError(std::string("expected ") + what);
    lex_.take();
  }

  ExprPtr sum() {
    ExprPtr e = term();
    for (;;) {
      Tok k = lex_.peek().kind;
      if (k == Tok::Plus) {
        lex_.take();
        e = Expr::add(e, term());
      } else if (k == Tok::Minus) {
        lex_.take();
        e = Expr::sub(e, term());
      } else {
        return e;
      }
    }
  }

  ExprPtr term() {
    ExprPtr e = factor();
    for (;;) {
      Tok k = lex_.peek().kind;
      if (k == Tok::Star) {
        lex_.take();
        e = Expr::mul(e, factor());
      } else if (k == Tok::Slash) {
        lex_.take();
        e = Expr::quot(e, factor());
      } else {
        return e;
      }
    }
  }

  ExprPtr factor() {
    if (lex_.peek().kind == Tok::Minus) {
      lex_.take();
      return Expr::neg(factor());
    }
    ExprPtr base = primary();
    if (lex_.peek().kind == Tok::Caret) {
      lex_.take();
      Token t = lex_.take();
      if (t.kind != Tok::Num || t.text.find('.') != std::string::npos)
        throw ParseError("exponent must be a non-negative integer");
      unsigned long e = std::stoul(t.text);
      return Expr::pow(base, static_cast<unsigned>(e));
    }
    return base;
  }

  ExprPtr primary() {
    Token t = lex_.take();
    switch (t.kind) {
      case Tok::Num:
        return Expr::make_const(vars_, parse_number(t.text));
      case Tok::LParen: {
        ExprPtr e = sum();
        expect(Tok::RParen, "')'");
        return e;
      }
      case Tok::Ident: {
        if (t.text == "pi") return Expr::make_pi(vars_, Rational(1));
        if (t.text == "sin" || t.text == "cos") {
          expect(Tok::LParen, "'(' after sin/cos");
          Token v = lex_.take();
          if (v.kind != Tok::Ident)
            throw ParseError("sin/cos apply to a single variable");
          int idx = vars_->require(v.text);
          expect(Tok::RParen, "')'");
          return t.text == "sin" ? Expr::make_sin(vars_, idx)
                                 : Expr::make_cos(vars_, idx);
        }
        return Expr::make_var(vars_, t.text);
      }
      default:
        throw ParseError("unexpected token '" + t.text + "'");
    }
  }

  // ---- set grammar ----

  SemialgSet set_or() {
    SemialgSet s = set_and();
    while (lex_.peek().kind == Tok::Pipe) {
      lex_.take();
      s = s || set_and();
    }
    return s;
  }

  SemialgSet set_and() {
    SemialgSet s = set_not();
    while (lex_.peek().kind == Tok::Amp) {
      lex_.take();
      s = s && set_not();
    }
    return s;
  }

  SemialgSet set_not() {
    if (lex_.peek().kind == Tok::Bang) {
      lex_.take();
      return set_not().negate();
    }
    return set_primary();
  }

  SemialgSet set_primary() {
    if (lex_.peek().kind == Tok::Ident && lex_.peek().text == "true") {
      lex_.take();
      return SemialgSet::top();
    }
    if (lex_.peek().kind == Tok::Ident && lex_.peek().text == "false") {
      lex_.take();
      return SemialgSet::bottom();
    }
    if (lex_.peek().kind == Tok::LParen) {
      // could be a parenthesized set or an arithmetic group; try set first
      size_t pos = lex_.mark();
      lex_.take();
      try {
        SemialgSet s = set_or();
        expect(Tok::RParen, "')'");
        return s;
      } catch (const ParseError&) {
        lex_.rewind(pos);
      }
    }
    return comparison();
  }

  SemialgSet comparison() {
    ExprPtr lhs = sum();
    Token op = lex_.take();
    ExprPtr rhs;
    switch (op.kind) {
      case Tok::Lt:
      case Tok::Le:
      case Tok::Gt:
      case Tok::Ge:
      case Tok::Eq:
      case Tok::Ne:
        rhs = sum();
        break;
      default:
        throw ParseError("expected comparison operator, got '" + op.text + "'");
    }
    ExprPtr diff = Expr::sub(lhs, rhs);
    switch (op.kind) {
      case Tok::Lt:
        return SemialgSet::atom(atom_lt(diff));
      case Tok::Le:
        return SemialgSet::atom(atom_le(diff));
      case Tok::Gt:
        return SemialgSet::atom(atom_gt(diff));
      case Tok::Ge:
        return SemialgSet::atom(atom_ge(diff));
      case Tok::Eq:
        return SemialgSet::atom(atom_eq(diff));
      case Tok::Ne:
        return SemialgSet::atom(atom_eq(diff)).negate();
      default:
        throw ParseError("unreachable");
    }
  }

  Lexer lex_;
  VarsPtr vars_;
};

}  // namespace

ExprPtr parse_expr(const std::string& text, const VarsPtr& vars) {
  Parser p(text, vars);
  return p.full_expr();
}

Polynomial parse_polynomial(const std::string& text, const VarsPtr& vars) {
  ExprPtr e = parse_expr(text, vars);
  auto p = e->as_polynomial();
  if (!p) throw ParseError("expression is not a polynomial: " + text);
  return *p;
}

SemialgSet parse_set(const std::string& text, const VarsPtr& vars) {
  Parser p(text, vars);
  return p.full_set();
}

}  // namespace hykeep
