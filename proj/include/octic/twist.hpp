#pragma once

#include "octic/arrangement.hpp"
#include "octic/involution.hpp"

namespace octic {

// Given a projective identification v -> M v carrying the source family
// into the target one, the double covers u^2 = f_src and u^2 = f_dst differ
// by the quadratic twist class of mu / e^2, where
//   f_dst(M v) = mu(A,B) * f_src(v)
// and e(A,B) is the claimed u-coefficient of the identification.  Returns
// the squarefree representative of that class (1 = no twist).
// NotProportional when M does not carry f_src to a multiple of f_dst.
MPoly classify_twist(const MPoly& f_src, const MPoly& f_dst, const PMat& m,
                     const MPoly& e);

struct TwistCase {
  std::string name;
  Arrangement src, dst;
  PMat m;
  MPoly u_coeff;                 // e
  std::optional<MPoly> expected; // expected squarefree class, if recorded
};

MPoly classify_twist(const TwistCase& tc);

}  // namespace octic
