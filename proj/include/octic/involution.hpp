#pragma once

#include <optional>
#include <string>
#include <vector>

#include "octic/arrangement.hpp"
#include "octic/matrix.hpp"
#include "octic/ratfunc.hpp"

namespace octic {

// A projective map of the double cover (x:y:z:t:u) -> (M(x,y,z,t) : c_u u),
// with u of weight 4, so (M, c_u) and (r M, r^4 c_u) are the same map.
struct WeightedMap {
  PMat m;
  MPoly u_coeff;
};

// Result of rescaling a rational matrix with M^2 = c*I to a genuine
// involution N = M/r, N^2 = I.  Both scalings +-M/r square to the identity
// and give the same projective map; n holds the r > 0 choice.
struct InvolutionScaling {
  QMat n;
  Rat c;  // M^2 = c I
  Rat r;  // r > 0, r^2 = c
  QMat other() const {  // the -M/r scaling
    QMat m;
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) m[i][j] = n[i][j].neg();
    return m;
  }
};

// NotInvolution when M^2 is not a nonzero scalar matrix;
// IrrationalNormalization when the scalar is not a rational square.
InvolutionScaling involution_normalize(const QMat& m);

// det(M) / c_u as a rational function of A, B; the map acts symplectically
// on the holomorphic 3-form exactly when this is 1.
RatFunc symplectic_lambda(const WeightedMap& wm);

// Fixed locus in P^3 of an involutive matrix: eigenspace split (1,3) gives
// an isolated point plus a pointwise-fixed plane, (2,2) gives two disjoint
// pointwise-fixed lines.  IdentityMap when N = +-I.
struct FixedLocus {
  enum class Kind { PointPlane, TwoLines } kind;
  // PointPlane
  std::array<Rat, 4> point{};
  std::array<Rat, 4> plane_normal{};
  int plane_eigenvalue = 0;  // eigenvalue on the fixed plane (+1 or -1)
  // TwoLines: canonical point bases of the eigenlines
  std::array<std::array<Rat, 4>, 2> line_plus{};
  std::array<std::array<Rat, 4>, 2> line_minus{};
  std::string str() const;
};

FixedLocus fixed_locus(const QMat& n);

// Check that the specialized arrangement is preserved: each composed form
// l_i(N v) must be proportional to some plane l_{perm[i]}.  kappa is the
// product of the 8 proportionality factors, so f(N v) = kappa * f(v).
// NotPreserved when some composed plane matches nothing.
struct OcticInvariance {
  Rat kappa{};
  std::vector<int> perm;  // 1-based target plane for each source plane
};

OcticInvariance octic_invariance(const Arrangement& specialized, const QMat& n);

// Is the single plane with normal n0 mapped to itself (up to scale)?
bool plane_invariant(const std::array<Rat, 4>& normal, const QMat& n);

}  // namespace octic
