#pragma once

#include <string>
#include <vector>

#include "octic/involution.hpp"
#include "octic/line_divisor.hpp"
#include "octic/strata.hpp"

namespace octic {

// The three fixed-curve requirements for an involution of the double cover
// to act freely enough that the quotient stays a (nodal) Calabi-Yau:
//   1. no singular line of the branch octic is pointwise fixed,
//   2. no plane through a fourfold point is mapped to itself,
//   3. each pointwise-fixed line meets the branch octic in at most two
//      points of odd multiplicity, and lies in no plane of the arrangement
//      (a contained line needs manual review and counts as a violation).
struct ConditionResult {
  std::string name;
  bool pass = true;
  std::vector<std::string> witnesses;
};

struct FixedCurveReport {
  ConditionResult fixed_singular_line;   // "no_fixed_singular_line"
  ConditionResult fourfold_point_planes; // "fourfold_planes_moved"
  ConditionResult odd_contact;           // "odd_contact_bound"
  bool all_pass() const {
    return fixed_singular_line.pass && fourfold_point_planes.pass && odd_contact.pass;
  }
};

// arr must be specialized; n involutive with the given fixed locus;
// strata computed from the same arrangement.
FixedCurveReport check_fixed_curves(const Arrangement& arr,
                                    const Strata<RatField>& strata,
                                    const FixedLocus& locus, const QMat& n);

}  // namespace octic
