#include "octic/parse.hpp"

#include <cctype>

#include "octic/error.hpp"

namespace octic {

namespace {

struct Parser {
  const std::string& s;
  size_t i = 0;
  ExprVars ctx;

  explicit Parser(const std::string& text, ExprVars c) : s(text), ctx(c) {}

  [[noreturn]] void err(const std::string& what) {
    fail(Err::Parse, what + " at position " + std::to_string(i) + " in '" + s + "'");
  }

  void skip_ws() {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  }
  char peek() {
    skip_ws();
    return i < s.size() ? s[i] : '\0';
  }
  char take() {
    char c = peek();
    if (c) ++i;
    return c;
  }

  bool starts_atom(char c) {
    return c == '(' || std::isdigit(static_cast<unsigned char>(c)) ||
           std::isalpha(static_cast<unsigned char>(c));
  }

  int read_var() {
    // Longest alphabetic run; "tau" is an alias for the family parameter.
    size_t start = i;
    while (i < s.size() && std::isalpha(static_cast<unsigned char>(s[i]))) ++i;
    std::string name = s.substr(start, i - start);
    int v = -1;
    if (name == "tau") {
      v = VS;
    } else if (name.size() == 1) {
      v = var_from_name(name[0]);
    }
    if (v < 0) {
      i = start;
      err("unknown name '" + name + "'");
    }
    switch (ctx) {
      case ExprVars::ParamsAB:
        if (v != VA && v != VB) err("variable '" + name + "' not allowed here");
        break;
      case ExprVars::FamilyTau:
        // In family-parameter strings the letter t denotes the parameter,
        // not the projective coordinate.
        if (v == VT) v = VS;
        if (v != VS) err("variable '" + name + "' not allowed here");
        break;
      case ExprVars::Full:
        break;
    }
    return v;
  }

  RatFunc atom() {
    char c = peek();
    if (c == '(') {
      take();
      RatFunc e = expr();
      if (peek() != ')') err("expected ')'");
      take();
      return e;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      skip_ws();
      size_t start = i;
      while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
      return RatFunc(Rat(mpq_class(mpz_class(s.substr(start, i - start)))));
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      skip_ws();
      return RatFunc(MPoly::variable(read_var()));
    }
    err("expected a number, variable or '('");
  }

  int exponent() {
    skip_ws();
    size_t start = i;
    if (i < s.size() && s[i] == '+') ++i;
    size_t dstart = i;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
    if (i == dstart) err("expected an integer exponent");
    long e = std::stol(s.substr(start, i - start));
    if (e > 64) err("exponent too large");
    return static_cast<int>(e);
  }

  RatFunc factor() {
    int sign = 1;
    while (peek() == '+' || peek() == '-') {
      if (take() == '-') sign = -sign;
    }
    RatFunc base = atom();
    if (peek() == '^') {
      take();
      int e = exponent();
      RatFunc p(Rat(1));
      for (int k = 0; k < e; ++k) p = p * base;
      base = p;
    }
    return sign < 0 ? -base : base;
  }

  RatFunc term() {
    RatFunc acc = factor();
    for (;;) {
      char c = peek();
      if (c == '*') {
        take();
        acc = acc * factor();
      } else if (c == '/') {
        take();
        RatFunc d = factor();
        if (d.is_zero()) err("division by zero");
        acc = acc / d;
      } else if (starts_atom(c)) {
        acc = acc * factor();  // juxtaposition, e.g. "2A"
      } else {
        return acc;
      }
    }
  }

  RatFunc expr() {
    RatFunc acc = term();
    for (;;) {
      char c = peek();
      if (c == '+') {
        take();
        acc = acc + term();
      } else if (c == '-') {
        take();
        acc = acc - term();
      } else {
        return acc;
      }
    }
  }

  RatFunc run() {
    RatFunc e = expr();
    if (peek() != '\0') err("trailing input");
    return e;
  }
};

}  // namespace

RatFunc parse_expr(const std::string& text, ExprVars ctx) {
  return Parser(text, ctx).run();
}

MPoly parse_poly(const std::string& text, ExprVars ctx) {
  RatFunc f = parse_expr(text, ctx);
  if (!f.den().is_constant())
    fail(Err::Parse, "expected a polynomial, got denominator " + f.den().str() +
                         " in '" + text + "'");
  return f.den().constant_value().inv() * f.num();
}

}  // namespace octic
