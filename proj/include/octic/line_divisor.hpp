#pragma once

#include <string>
#include <vector>

#include "octic/arrangement.hpp"

namespace octic {

// Intersection divisor of the branch octic with a line, parameterized as
// sigma*P + upsilon*Q.  Planes containing the line are listed separately;
// every other plane contributes exactly one root, so the multiplicities
// plus the contained planes always account for all 8.
struct LineDivisor {
  struct Contact {
    std::array<Rat, 2> root;  // canonical (sigma : upsilon)
    int multiplicity = 0;
    std::vector<int> planes;
  };
  std::vector<Contact> contacts;
  std::vector<int> contained;  // planes vanishing identically on the line

  int odd_count() const {
    int n = 0;
    for (const auto& c : contacts) n += (c.multiplicity % 2);
    return n;
  }
  std::string str() const;
};

// arr must be specialized (no parameters); P, Q independent points.
LineDivisor restrict_to_line(const Arrangement& arr, const std::array<Rat, 4>& p,
                             const std::array<Rat, 4>& q);

}  // namespace octic
