#pragma once

#include <string>

#include "octic/mpoly.hpp"

namespace octic {

// Quotient of polynomials, kept reduced with a monic denominator
// (leading coefficient 1 in grlex).  Zero is 0/1.
class RatFunc {
 public:
  RatFunc() : num_(), den_(1) {}
  RatFunc(const MPoly& n) : num_(n), den_(1) {}  // NOLINT
  explicit RatFunc(const Rat& c) : num_(MPoly(c)), den_(1) {}
  RatFunc(const MPoly& n, const MPoly& d);

  const MPoly& num() const { return num_; }
  const MPoly& den() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const;
  bool is_polynomial() const { return den_ == MPoly(1); }
  bool is_constant() const { return num_.is_constant() && den_.is_constant(); }
  Rat constant_value() const;

  RatFunc operator-() const;
  friend RatFunc operator+(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator-(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator*(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator/(const RatFunc& a, const RatFunc& b);
  friend bool operator==(const RatFunc& a, const RatFunc& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const RatFunc& a, const RatFunc& b) { return !(a == b); }

  RatFunc derivative(int v) const;
  // Substitute rational values; PoleAtPoint when the denominator vanishes.
  Rat eval(const std::array<const Rat*, kNVars>& vals) const;

  std::string str() const;

 private:
  MPoly num_, den_;
  void reduce();
};

// mu in Q(A,B) with g = mu * f, found by matching one projective-coordinate
// monomial and verified by cross-multiplication; NotProportional when the
// x,y,z,t,s-dependence fails to cancel.  f must be nonzero.
RatFunc constant_ratio(const MPoly& f, const MPoly& g);

// Same with an arbitrary set of variables allowed in the ratio
// (bit v set in coeff_vars = variable v may appear in mu).
RatFunc constant_ratio_vars(const MPoly& f, const MPoly& g, unsigned coeff_vars);

}  // namespace octic
