#include "octic/mobius.hpp"

#include <algorithm>

#include "octic/error.hpp"

namespace octic {

namespace {

void require_mobius(const RatFunc& g) {
  for (int v = 0; v < kNVars; ++v) {
    if (v == VS) continue;
    if (g.num().uses(v) || g.den().uses(v))
      fail(Err::Invalid, "family map must involve only the parameter: " + g.str());
  }
  if (g.num().degree_in(VS) > 1 || g.den().degree_in(VS) > 1)
    fail(Err::Invalid, "family map must have degree one: " + g.str());
  // Proportional num/den means a constant map; RatFunc reduction would have
  // left a constant denominator and numerator.
  if (g.is_constant()) fail(Err::Degenerate, "family map is constant");
}

Rat coeff_s(const MPoly& p, int k) {
  Expo e;
  e.e[VS] = static_cast<int16_t>(k);
  return p.coeff(e);
}

}  // namespace

MobiusFixedPoints mobius_fixed_points(const RatFunc& g) {
  require_mobius(g);
  // g = (a s + b)/(c s + d)
  Rat a = coeff_s(g.num(), 1), b = coeff_s(g.num(), 0);
  Rat c = coeff_s(g.den(), 1), d = coeff_s(g.den(), 0);

  MobiusFixedPoints out;
  out.fixes_infinity = c.is_zero();
  // q(s) = c s^2 + (d - a) s - b = 0
  Rat qa = c, qb = d - a, qc = b.neg();
  if (qa.is_zero() && qb.is_zero() && qc.is_zero())
    fail(Err::Degenerate, "identity map: every point is fixed");
  if (qa.is_zero()) {
    if (!qb.is_zero()) out.rational.push_back(qc.neg() / qb);
    // qb == 0, qc != 0: no affine fixed point (translation; infinity only).
    return out;
  }
  Rat disc = qb * qb - Rat(4) * qa * qc;
  int sign = disc.sign();
  if (sign < 0) {
    out.nonreal = true;
    return out;
  }
  Rat root;
  if (!disc.square_root(&root)) {
    out.irrational = true;
    return out;
  }
  if (sign == 0) {
    out.double_point = true;
    out.rational.push_back(qb.neg() / (Rat(2) * qa));
    return out;
  }
  Rat r1 = (qb.neg() - root) / (Rat(2) * qa);
  Rat r2 = (qb.neg() + root) / (Rat(2) * qa);
  out.rational = {std::min(r1, r2), std::max(r1, r2)};
  return out;
}

Rat mobius_eval(const RatFunc& g, const Rat& tau0) {
  require_mobius(g);
  std::array<const Rat*, kNVars> vals{};
  vals[VS] = &tau0;
  return g.eval(vals);
}

Rat mobius_derivative(const RatFunc& g, const Rat& tau0) {
  require_mobius(g);
  RatFunc d = g.derivative(VS);
  std::array<const Rat*, kNVars> vals{};
  vals[VS] = &tau0;
  return d.eval(vals);
}

std::pair<MPoly, MPoly> mobius_homogeneous(const RatFunc& g) {
  require_mobius(g);
  Rat a = coeff_s(g.num(), 1), b = coeff_s(g.num(), 0);
  Rat c = coeff_s(g.den(), 1), d = coeff_s(g.den(), 0);
  MPoly A = MPoly::variable(VA), B = MPoly::variable(VB);
  return {a * A + b * B, c * A + d * B};
}

}  // namespace octic
