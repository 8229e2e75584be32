#include "octic/line_divisor.hpp"

#include <algorithm>
#include <sstream>

#include "octic/error.hpp"

namespace octic {

LineDivisor restrict_to_line(const Arrangement& arr, const std::array<Rat, 4>& p,
                             const std::array<Rat, 4>& q) {
  {
    RatField f;
    std::vector<std::array<Rat, 4>> rows = {p, q};
    if (rank_of(f, rows) != 2)
      fail(Err::Invalid, "line basis points are proportional");
  }
  LineDivisor div;
  for (const auto& plane : arr.planes) {
    auto n = plane.rational_normal();
    Rat alpha(0), beta(0);
    for (int i = 0; i < 4; ++i) {
      alpha += n[i] * p[i];
      beta += n[i] * q[i];
    }
    if (alpha.is_zero() && beta.is_zero()) {
      div.contained.push_back(plane.index);
      continue;
    }
    // alpha*sigma + beta*upsilon = 0  =>  (sigma:upsilon) = (beta:-alpha)
    auto root = primitive_vec2({beta, alpha.neg()});
    bool found = false;
    for (auto& c : div.contacts)
      if (c.root == root) {
        c.multiplicity += 1;
        c.planes.push_back(plane.index);
        found = true;
        break;
      }
    if (!found) div.contacts.push_back({root, 1, {plane.index}});
  }
  std::sort(div.contacts.begin(), div.contacts.end(),
            [](const LineDivisor::Contact& a, const LineDivisor::Contact& b) {
              if (a.root[0] != b.root[0]) return a.root[0] < b.root[0];
              return a.root[1] < b.root[1];
            });
  return div;
}

std::string LineDivisor::str() const {
  std::ostringstream os;
  for (size_t i = 0; i < contacts.size(); ++i) {
    if (i) os << " ";
    os << "(" << contacts[i].root[0].str() << ":" << contacts[i].root[1].str()
       << ")^" << contacts[i].multiplicity;
  }
  if (!contained.empty()) {
    os << (contacts.empty() ? "" : " ") << "contained{";
    for (size_t i = 0; i < contained.size(); ++i) os << (i ? "," : "") << contained[i];
    os << "}";
  }
  return os.str();
}

}  // namespace octic
