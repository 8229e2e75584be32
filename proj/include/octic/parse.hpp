#pragma once

#include <string>

#include "octic/ratfunc.hpp"

namespace octic {

// Which letters an expression is allowed to mention.
enum class ExprVars {
  ParamsAB,   // A, B only (arrangement coefficients, map entries)
  FamilyTau,  // the family parameter: "t", "s" or "tau", mapped to the
              // internal variable s
  Full,       // x,y,z,t,s,A,B with t = coordinate
};

// Parse "+ - * / ^ ( )" expressions with integer literals over the allowed
// variables; implicit multiplication by juxtaposition is accepted.
// Raises ParseError on malformed input.
RatFunc parse_expr(const std::string& text, ExprVars ctx);

// Same, but the result must be a polynomial (denominator constant);
// e.g. "A+B", "-2*A", "1/2*B".
MPoly parse_poly(const std::string& text, ExprVars ctx);

}  // namespace octic
