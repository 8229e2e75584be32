#include "octic/ratfunc.hpp"

#include <cassert>

#include "octic/error.hpp"

namespace octic {

RatFunc::RatFunc(const MPoly& n, const MPoly& d) : num_(n), den_(d) {
  if (den_.is_zero()) fail(Err::Invalid, "rational function with zero denominator");
  reduce();
}

void RatFunc::reduce() {
  if (num_.is_zero()) {
    den_ = MPoly(1);
    return;
  }
  MPoly g = poly_gcd(num_, den_);
  num_ = *MPoly::divide_exact(num_, g);
  den_ = *MPoly::divide_exact(den_, g);
  Rat lc = den_.leading_coeff();
  if (!lc.is_one()) {
    Rat inv = lc.inv();
    num_ = inv * num_;
    den_ = inv * den_;
  }
}

bool RatFunc::is_one() const { return num_ == MPoly(1) && den_ == MPoly(1); }

Rat RatFunc::constant_value() const {
  assert(is_constant());
  return num_.constant_value() / den_.constant_value();
}

RatFunc RatFunc::operator-() const {
  RatFunc r;
  r.num_ = -num_;
  r.den_ = den_;
  return r;
}

RatFunc operator+(const RatFunc& a, const RatFunc& b) {
  return RatFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RatFunc operator-(const RatFunc& a, const RatFunc& b) {
  return RatFunc(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}

RatFunc operator*(const RatFunc& a, const RatFunc& b) {
  return RatFunc(a.num_ * b.num_, a.den_ * b.den_);
}

RatFunc operator/(const RatFunc& a, const RatFunc& b) {
  if (b.is_zero()) fail(Err::Invalid, "division by zero rational function");
  return RatFunc(a.num_ * b.den_, a.den_ * b.num_);
}

RatFunc RatFunc::derivative(int v) const {
  return RatFunc(num_.derivative(v) * den_ - num_ * den_.derivative(v), den_ * den_);
}

Rat RatFunc::eval(const std::array<const Rat*, kNVars>& vals) const {
  MPoly n = num_.eval_partial(vals), d = den_.eval_partial(vals);
  if (!n.is_constant() || !d.is_constant())
    fail(Err::Invalid, "rational function evaluation left free variables");
  if (d.constant_value().is_zero()) fail(Err::PoleAtPoint, "denominator vanishes");
  return n.constant_value() / d.constant_value();
}

std::string RatFunc::str() const {
  if (is_polynomial()) return num_.str();
  return "(" + num_.str() + ")/(" + den_.str() + ")";
}

RatFunc constant_ratio_vars(const MPoly& f, const MPoly& g, unsigned coeff_vars) {
  if (f.is_zero()) fail(Err::Invalid, "constant_ratio with zero reference polynomial");
  if (g.is_zero()) return RatFunc();
  // Split each term into coefficient part (allowed variables) and the rest;
  // the ratio is the quotient of matching coefficient polynomials, checked
  // globally by cross-multiplication.
  auto coeff_of = [coeff_vars](const MPoly& p, const Expo& mono) {
    MPolyBuilder b;
    for (const auto& [e, c] : p.terms()) {
      bool match = true;
      Expo keep;
      for (int v = 0; v < kNVars; ++v) {
        if (coeff_vars & (1u << v)) {
          keep.e[v] = e.e[v];
        } else if (e.e[v] != mono.e[v]) {
          match = false;
          break;
        }
      }
      if (match) b.add(keep, c);
    }
    return b.take();
  };
  const Expo& lead = f.leading_expo();
  MPoly phi = coeff_of(f, lead);
  MPoly psi = coeff_of(g, lead);
  if (g * phi != f * psi)
    fail(Err::NotProportional, "coordinate dependence does not cancel");
  return RatFunc(psi, phi);
}

RatFunc constant_ratio(const MPoly& f, const MPoly& g) {
  return constant_ratio_vars(f, g, (1u << VA) | (1u << VB));
}

}  // namespace octic
