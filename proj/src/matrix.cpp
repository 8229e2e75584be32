#include "octic/matrix.hpp"

#include "octic/error.hpp"

namespace octic {

Rat eval_ab(const MPoly& p, const Rat& a, const Rat& b) {
  std::array<const Rat*, kNVars> vals{};
  vals[VA] = &a;
  vals[VB] = &b;
  MPoly r = p.eval_partial(vals);
  if (!r.is_constant())
    fail(Err::Invalid, "expected a polynomial in A,B only: " + p.str());
  return r.constant_value();
}

QMat mat_specialize(const PMat& m, const Rat& a, const Rat& b) {
  QMat r;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) r[i][j] = eval_ab(m[i][j], a, b);
  return r;
}

}  // namespace octic
