#pragma once

#include <optional>
#include <string>
#include <vector>

#include "octic/arrangement.hpp"
#include "octic/involution.hpp"
#include "octic/ratfunc.hpp"

namespace octic {

// A one-parameter family with a candidate fiberwise involution: the
// arrangement (possibly depending on A, B), the weighted map (M, c_u), a
// parameter transformation g with f_{g(s)} o M proportional to f_s, and the
// special parameter value tau0 that g is supposed to fix with g' = -1.
struct FamilyCase {
  std::string name;
  bool has_arrangement = false;  // false: listed as external in the case file
  Arrangement arr;               // valid only when has_arrangement
  WeightedMap map;
  RatFunc g;       // in the parameter variable s
  Rat tau0;
  std::string form;     // modular form label this case should match
  std::string note;     // free-form note carried through from the case file
};

struct CheckRecord {
  std::string check;
  enum class Status { Pass, Fail, Skip } status = Status::Pass;
  std::string witness;
  // What a passing verdict contributes to the final conclusion, in plain
  // mathematical terms.
  std::string establishes;
};

const char* status_name(CheckRecord::Status s);

struct Certificate {
  std::string case_name;
  std::vector<CheckRecord> records;
  enum class Conclusion { CertifiedRigidQuotient, Refuted, Incomplete } conclusion;
  std::string detail;
};

const char* conclusion_name(Certificate::Conclusion c);

// The map/parameter part: symplectic_lambda == 1, g fixes tau0 with
// derivative -1, M specializes to an involution at tau0, and the symbolic
// intertwining identity f_{g(s)}(M_s v) = c_u(s)^2 f_s(v) holds.
std::vector<CheckRecord> check_family(const FamilyCase& fc);

// Everything: the family checks plus the arrangement-level certification at
// tau0 (admissibility, octic invariance with kappa = c_u^2, fixed locus,
// fixed-curve conditions).  Never throws for check failures; they become
// Fail records and a Refuted conclusion.  Missing inputs become Skip
// records and an Incomplete conclusion.
Certificate certify_case(const FamilyCase& fc);

// (A, B) used when specializing at tau0 = num/den in lowest terms.
std::pair<Rat, Rat> tau_to_ab(const Rat& tau0);

}  // namespace octic
