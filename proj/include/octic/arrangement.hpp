#pragma once

#include <string>
#include <vector>

#include "octic/matrix.hpp"
#include "octic/mpoly.hpp"

namespace octic {

// One plane a0*x + a1*y + a2*z + a3*t = 0.  Coefficients may involve the
// parameters A, B; scaling is canonicalized (rational content 1, leading
// coefficient of the first nonzero entry positive).
struct Plane {
  std::array<MPoly, 4> c{};
  // 1-based position in the arrangement, used in witnesses.
  int index = 0;

  MPoly form() const;  // the linear form in x,y,z,t
  bool parametric() const;
  std::array<Rat, 4> rational_normal() const;  // requires non-parametric
  std::string str() const;
};

// Eight planes; the branch octic is the product of their forms.
struct Arrangement {
  std::string name;
  std::vector<Plane> planes;

  bool parametric() const;
  MPoly octic() const;
  std::vector<std::array<Rat, 4>> rational_normals() const;
};

// Canonicalizes every plane and validates the count; DegeneratePlane when a
// plane is identically zero, DuplicatePlanes when two planes are
// proportional.
Arrangement make_arrangement(const std::string& name,
                             const std::vector<std::array<MPoly, 4>>& raw);

// Substitute A = a, B = b; same validation as make_arrangement but against
// the specialized coefficients (a degeneration at this parameter reports
// DegeneratePlane / DuplicatePlanes with the offending indices).
Arrangement specialize(const Arrangement& arr, const Rat& a, const Rat& b);

// Canonical scaling of one coefficient vector; zero vector -> DegeneratePlane.
std::array<MPoly, 4> canonicalize_plane(const std::array<MPoly, 4>& c);

bool planes_proportional(const Plane& p, const Plane& q);

}  // namespace octic
