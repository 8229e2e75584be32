#include "octic/twist.hpp"

#include "octic/error.hpp"
#include "octic/ratfunc.hpp"

namespace octic {

MPoly classify_twist(const MPoly& f_src, const MPoly& f_dst, const PMat& m,
                     const MPoly& e) {
  if (e.is_zero()) fail(Err::Invalid, "twist scale e must be nonzero");
  std::array<MPoly, 4> images;
  for (int i = 0; i < 4; ++i) {
    MPoly acc;
    for (int j = 0; j < 4; ++j) acc += m[i][j] * MPoly::variable(j);
    images[i] = acc;
  }
  std::array<const MPoly*, kNVars> ptr{};
  for (int i = 0; i < 4; ++i) ptr[i] = &images[i];
  MPoly composed = f_dst.subst(ptr);
  RatFunc mu = constant_ratio(f_src, composed);
  if (mu.is_zero()) fail(Err::Invalid, "target octic composed with M is zero");
  RatFunc cls = mu / RatFunc(e * e);
  // num/den and num*den agree modulo squares.
  return squarefree_part(cls.num() * cls.den());
}

MPoly classify_twist(const TwistCase& tc) {
  return classify_twist(tc.src.octic(), tc.dst.octic(), tc.m, tc.u_coeff);
}

}  // namespace octic
