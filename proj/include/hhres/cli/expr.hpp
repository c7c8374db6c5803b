#ifndef HHRES_CLI_EXPR_HPP
#define HHRES_CLI_EXPR_HPP

#include <cctype>
#include <cstddef>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "hhres/error.hpp"
#include "hhres/exactlin/rational.hpp"

namespace hhres::cli {

/// Parse tree for algebraic input.
struct Expr {
  enum class Kind { Number, Variable, Add, Sub, Neg, Mul, Pow, D, Wedge };

  Kind kind = Kind::Number;
  Rational value;      // Number
  std::string name;    // Variable
  int power = 0;       // Pow
  std::vector<std::shared_ptr<const Expr>> kids;
  std::size_t position = 0;

  friend bool operator==(const Expr& a, const Expr& b) {
    if (a.kind != b.kind || a.value != b.value || a.name != b.name || a.power != b.power || a.kids.size() != b.kids.size())
      return false;
    for (std::size_t i = 0; i < a.kids.size(); ++i)
      if (!(*a.kids[i] == *b.kids[i])) return false;
    return true;
  }
};

using ExprPtr = std::shared_ptr<const Expr>;

namespace detail {

class Parser {
 public:
  explicit Parser(std::string_view s) : s_(s) {}

  ExprPtr parse_all() {
    ExprPtr e = wedge();
    skip();
    if (i_ != s_.size()) fail("unexpected '" + std::string(1, s_[i_]) + "'");
    return e;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, i_); }

  void skip() {
    while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
  }

  bool peek(std::string_view tok) {
    skip();
    return s_.substr(i_, tok.size()) == tok;
  }

  bool accept(std::string_view tok) {
    if (!peek(tok)) return false;
    i_ += tok.size();
    return true;
  }

  void expect(std::string_view tok) {
    if (!accept(tok)) fail("expected '" + std::string(tok) + "'");
  }

  static ExprPtr node(Expr::Kind k, std::vector<ExprPtr> kids, std::size_t pos) {
    auto e = std::make_shared<Expr>();
    e->kind = k;
    e->kids = std::move(kids);
    e->position = pos;
    return e;
  }

  ExprPtr wedge() {
    ExprPtr e = expr();
    while (true) {
      const std::size_t pos = (skip(), i_);
      if (!accept("/\\")) return e;
      e = node(Expr::Kind::Wedge, {e, expr()}, pos);
    }
  }

  ExprPtr expr() {
    const std::size_t pos = (skip(), i_);
    ExprPtr e;
    if (accept("-"))
      e = node(Expr::Kind::Neg, {term()}, pos);
    else
      e = term();
    while (true) {
      skip();
      const std::size_t p = i_;
      if (accept("+"))
        e = node(Expr::Kind::Add, {e, term()}, p);
      else if (accept("-"))
        e = node(Expr::Kind::Sub, {e, term()}, p);
      else
        return e;
    }
  }

  ExprPtr term() {
    ExprPtr e = factor();
    while (true) {
      skip();
      const std::size_t p = i_;
      if (!accept("*")) return e;
      e = node(Expr::Kind::Mul, {e, factor()}, p);
    }
  }

  ExprPtr factor() {
    ExprPtr base = atom();
    skip();
    const std::size_t p = i_;
    if (!accept("^")) return base;
    const bool paren = accept("(");
    skip();
    int sign = 1;
    if (accept("-"))
      sign = -1;
    else
      accept("+");
    skip();
    if (i_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[i_]))) fail("expected an integer exponent");
    long k = 0;
    while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) {
      k = k * 10 + (s_[i_++] - '0');
      if (k > 100000) fail("exponent too large");
    }
    if (paren) expect(")");
    auto e = std::make_shared<Expr>();
    e->kind = Expr::Kind::Pow;
    e->power = sign * static_cast<int>(k);
    e->kids = {base};
    e->position = p;
    return e;
  }

  std::string digits() {
    std::string d;
    while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) d += s_[i_++];
    return d;
  }

  ExprPtr atom() {
    skip();
    const std::size_t pos = i_;
    if (i_ >= s_.size()) fail("unexpected end of input");
    const char c = s_[i_];
    if (c == '(') {
      ++i_;
      ExprPtr e = wedge();
      expect(")");
      return e;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::string text = digits();
      if (i_ + 1 < s_.size() && s_[i_] == '/' && std::isdigit(static_cast<unsigned char>(s_[i_ + 1]))) {
        ++i_;
        text += "/" + digits();
      }
      auto e = std::make_shared<Expr>();
      e->kind = Expr::Kind::Number;
      try {
        e->value = Rational::parse(text);
      } catch (const Error&) {
        i_ = pos;
        fail("bad number '" + text + "'");
      }
      e->position = pos;
      return e;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::string id;
      while (i_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[i_])) || s_[i_] == '_')) id += s_[i_++];
      if (id == "d" && peek("(")) {
        expect("(");
        ExprPtr inner = expr();
        expect(")");
        return node(Expr::Kind::D, {inner}, pos);
      }
      auto e = std::make_shared<Expr>();
      e->kind = Expr::Kind::Variable;
      e->name = id;
      e->position = pos;
      return e;
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  std::string_view s_;
  std::size_t i_ = 0;
};

inline bool is_additive(const Expr& e) {
  return e.kind == Expr::Kind::Add || e.kind == Expr::Kind::Sub || e.kind == Expr::Kind::Neg;
}

}  // namespace detail

/// expr := ['-'] term (('+'|'-') term)*; term := factor ('*' factor)*;
/// factor := atom ('^' int)?; atom := rational | ident | '(' wedge ')' | 'd' '(' expr ')';
/// wedge := expr ('/\' expr)*.
inline ExprPtr parse(std::string_view text) { return detail::Parser(text).parse_all(); }

/// Canonical text; parse(print(e)) == e.
inline std::string print(const Expr& e) {
  using K = Expr::Kind;
  const auto wrap = [](const Expr& x, bool paren) { return paren ? "(" + print(x) + ")" : print(x); };
  switch (e.kind) {
    case K::Number:
      return e.value.to_string();
    case K::Variable:
      return e.name;
    case K::Add:
    case K::Sub: {
      const Expr& r = *e.kids[1];
      return wrap(*e.kids[0], e.kids[0]->kind == K::Wedge) + (e.kind == K::Add ? " + " : " - ") +
             wrap(r, detail::is_additive(r) || r.kind == K::Wedge);
    }
    case K::Neg: {
      const Expr& x = *e.kids[0];
      return "-" + wrap(x, detail::is_additive(x) || x.kind == K::Wedge);
    }
    case K::Mul: {
      const Expr& l = *e.kids[0];
      const Expr& r = *e.kids[1];
      return wrap(l, detail::is_additive(l) || l.kind == K::Wedge) + " * " +
             wrap(r, detail::is_additive(r) || r.kind == K::Wedge || r.kind == K::Mul);
    }
    case K::Pow: {
      const Expr& b = *e.kids[0];
      const bool atomic = b.kind == K::Variable || b.kind == K::D || (b.kind == K::Number && b.value.is_integer());
      return wrap(b, !atomic) + "^" + std::to_string(e.power);
    }
    case K::D:
      return "d(" + wrap(*e.kids[0], e.kids[0]->kind == K::Wedge) + ")";
    case K::Wedge: {
      const Expr& r = *e.kids[1];
      return print(*e.kids[0]) + " /\\ " + wrap(r, r.kind == K::Wedge);
    }
  }
  return "";
}

}  // namespace hhres::cli

#endif  // HHRES_CLI_EXPR_HPP
