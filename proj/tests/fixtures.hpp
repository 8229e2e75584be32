#pragma once

// ---------------------------------------------------------------------------
// Shared geometric fixtures.  R is the running synthetic arrangement used
// throughout the suite; the variants around it are tuned so that each of the
// three fixed-curve conditions can be made to fail in isolation.
// ---------------------------------------------------------------------------

#include <array>

#include "octic/arrangement.hpp"
#include "octic/family.hpp"
#include "octic/matrix.hpp"
#include "octic/parse.hpp"

namespace octic::fixtures {

inline std::array<MPoly, 4> plane(long a, long b, long c, long d) {
  return {MPoly(a), MPoly(b), MPoly(c), MPoly(d)};
}

// Coordinate tetrahedron plus four diagonal planes.  Its strata exercise
// every code path: three triple lines, fourfold and fivefold points, and
// fourfold points both on and off triple lines.
inline Arrangement running_r() {
  return make_arrangement(
      "R", {plane(1, 0, 0, 0), plane(0, 1, 0, 0), plane(0, 0, 1, 0),
            plane(0, 0, 0, 1), plane(1, 1, 0, 0), plane(0, 0, 1, 1),
            plane(1, 1, 1, 1), plane(1, -1, 1, -1)});
}

// (x:y:z:t) -> (y:x:t:z); fixed lines {x=y, z=t} and {x=-y, z=-t}.
inline QMat swap_map_q() {
  QMat m;
  m[0][1] = Rat(1);
  m[1][0] = Rat(1);
  m[2][3] = Rat(1);
  m[3][2] = Rat(1);
  return m;
}

inline PMat swap_map_p() {
  PMat m;
  m[0][1] = MPoly(1);
  m[1][0] = MPoly(1);
  m[2][3] = MPoly(1);
  m[3][2] = MPoly(1);
  return m;
}

// Swap-closed arrangement passing all three fixed-curve conditions: both
// fixed lines meet every plane pair in a double point and lie in no plane,
// and no plane is swap-invariant.
inline Arrangement passing_variant() {
  return make_arrangement(
      "R_pass", {plane(1, 0, 0, 0), plane(0, 1, 0, 0), plane(0, 0, 1, 0),
                 plane(0, 0, 0, 1), plane(1, 0, 2, 0), plane(0, 1, 0, 2),
                 plane(1, 0, 0, 3), plane(0, 1, 3, 0)});
}

// Swap-closed, admissible, but with the invariant plane x+y+z+t through the
// fourfold point (0:1:0:-1): condition 2 must fail while condition 1 holds.
inline Arrangement mutant_invariant_plane() {
  return make_arrangement(
      "R_mut_ii", {plane(1, 0, 0, 0), plane(0, 1, 0, 0), plane(0, 0, 1, 0),
                   plane(0, 0, 0, 1), plane(1, 1, 1, 1), plane(1, -1, 2, -2),
                   plane(1, 0, 2, 0), plane(0, 1, 0, 2)});
}

// Not swap-closed; the fixed line {x=y, z=t} meets all 8 planes in distinct
// simple points, so condition 3 fails with 8 odd contacts while conditions
// 1 and 2 hold.
inline Arrangement mutant_odd_contact() {
  return make_arrangement(
      "R_mut_iii", {plane(1, 0, 0, 0), plane(0, 0, 1, 0), plane(1, 0, 1, 0),
                    plane(0, 1, 2, 0), plane(1, 0, 0, 3), plane(0, 1, 0, 4),
                    plane(1, 1, 5, 0), plane(1, 1, 1, 6)});
}

// (x:y:z:t) -> (z:t:x:y); fixed lines {x=z, y=t} and {x=-z, y=-t}.
inline QMat cross_map_q() {
  QMat m;
  m[0][2] = Rat(1);
  m[1][3] = Rat(1);
  m[2][0] = Rat(1);
  m[3][1] = Rat(1);
  return m;
}

inline PMat cross_map_p() {
  PMat m;
  m[0][2] = MPoly(1);
  m[1][3] = MPoly(1);
  m[2][0] = MPoly(1);
  m[3][1] = MPoly(1);
  return m;
}

// Genuinely parametric pencil closed under the cross map combined with the
// parameter swap A <-> B: plane 5 goes to plane 6 and 7 to 8 (and back), so
// f(B,A; Mv) = f(A,B; v) exactly.  The fibers at both fixed points of
// g = 1/s stay reduced, and the fiber at (1,1) certifies: no triple lines,
// no invariant planes, and both fixed lines have only even contacts.
inline Arrangement pencil_pass() {
  MPoly A = MPoly::variable(VA), B = MPoly::variable(VB), o(1), z;
  return make_arrangement(
      "pencil", {std::array<MPoly, 4>{o, z, z, z}, {z, o, z, z}, {z, z, o, z},
                 {z, z, z, o},
                 {A, B, B, z},     // Ax + By + Bz
                 {A, z, B, A},     // Ax + Bz + At
                 {B, A, z, B},     // Bx + Ay + Bt
                 {z, A, A, B}});   // Ay + Az + Bt
}

// ---------------------------------------------------------------------------
// Ready-made family cases for the certifier.
// ---------------------------------------------------------------------------

inline RatFunc g_inverse() { return parse_expr("1/t", ExprVars::FamilyTau); }

// Constant arrangement, coordinate swap: certifies end to end.
inline FamilyCase synthetic_pass_case() {
  FamilyCase fc;
  fc.name = "synthetic_pass";
  fc.has_arrangement = true;
  fc.arr = passing_variant();
  fc.map = {swap_map_p(), MPoly(1)};
  fc.g = g_inverse();
  fc.tau0 = Rat(-1);
  return fc;
}

// The running arrangement with the swap map: refuted (the triple line
// x+y = z+t = 0 is pointwise fixed, among other failures).
inline FamilyCase rswap_case() {
  FamilyCase fc;
  fc.name = "R_swap";
  fc.has_arrangement = true;
  fc.arr = running_r();
  fc.map = {swap_map_p(), MPoly(1)};
  fc.g = g_inverse();
  fc.tau0 = Rat(-1);
  return fc;
}

// Parametric pencil with the cross map: certifies at tau0 = 1 with the
// intertwining identity checked symbolically in (A, B).
inline FamilyCase pencil_case() {
  FamilyCase fc;
  fc.name = "pencil";
  fc.has_arrangement = true;
  fc.arr = pencil_pass();
  fc.map = {cross_map_p(), MPoly(1)};
  fc.g = g_inverse();
  fc.tau0 = Rat(1);
  return fc;
}

// Inadmissible: the line x=y=0 lies on four planes.
inline Arrangement fourfold_line_arrangement() {
  return make_arrangement(
      "bad_line", {plane(1, 0, 0, 0), plane(0, 1, 0, 0), plane(1, 1, 0, 0),
                   plane(1, -1, 0, 0), plane(0, 0, 1, 0), plane(0, 0, 0, 1),
                   plane(0, 0, 1, 1), plane(0, 0, 1, -1)});
}

// Inadmissible: six planes through (0:0:0:1) with no four sharing a line.
inline Arrangement sixfold_point_arrangement() {
  return make_arrangement(
      "bad_point", {plane(1, 0, 0, 0), plane(0, 1, 0, 0), plane(0, 0, 1, 0),
                    plane(1, 1, 0, 0), plane(1, 0, 1, 0), plane(0, 1, 1, 0),
                    plane(0, 0, 0, 1), plane(1, 1, 1, 1)});
}

}  // namespace octic::fixtures
