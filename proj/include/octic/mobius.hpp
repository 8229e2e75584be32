#pragma once

#include <vector>

#include "octic/ratfunc.hpp"

namespace octic {

// Fixed points of a degree-one fractional-linear map g in the family
// parameter.  The fixed-point equation num(s) - s*den(s) = 0 has degree at
// most two; the flags record how it factors over Q.
struct MobiusFixedPoints {
  std::vector<Rat> rational;   // affine rational fixed points, ascending
  bool double_point = false;   // one rational fixed point of multiplicity 2
  bool irrational = false;     // real quadratic pair, not rational
  bool nonreal = false;        // complex conjugate pair
  bool fixes_infinity = false;
};

// g must be a genuine Mobius map: numerator and denominator of degree <= 1
// in the parameter and not proportional (Degenerate otherwise; the identity
// map also reports Degenerate since everything is fixed).
MobiusFixedPoints mobius_fixed_points(const RatFunc& g);

// Exact g'(tau0); PoleAtPoint when the denominator vanishes there.
Rat mobius_derivative(const RatFunc& g, const Rat& tau0);

// Degree-one substitution induced on the homogeneous parameters by
// g = (a s + b)/(c s + d): returns (aA + bB, cA + dB), so that specializing
// a family datum at g(tau) is the same as substituting these for (A, B).
std::pair<MPoly, MPoly> mobius_homogeneous(const RatFunc& g);

// Exact g(tau0); PoleAtPoint on the pole.
Rat mobius_eval(const RatFunc& g, const Rat& tau0);

}  // namespace octic
