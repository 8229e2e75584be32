#include "octic/strata.hpp"

#include <sstream>

namespace octic {

std::string StrataSignature::str() const {
  std::ostringstream os;
  os << "lines[";
  for (size_t i = 0; i < line_mults.size(); ++i)
    os << (i ? "," : "") << line_mults[i];
  os << "] points[";
  for (size_t i = 0; i < point_profile.size(); ++i)
    os << (i ? "," : "") << point_profile[i].first
       << (point_profile[i].second ? "T" : "");
  os << "]";
  return os.str();
}

std::string line_str(const LineStratum<RatField>& line) {
  return "span{" + vec4_str(primitive_vec4(line.basis[0])) + ", " +
         vec4_str(primitive_vec4(line.basis[1])) + "}";
}

std::string point_str(const std::array<Rat, 4>& pt) {
  return vec4_str(primitive_vec4(pt));
}

AdmissibilityReport admissibility(const Strata<RatField>& s) {
  AdmissibilityReport rep;
  auto plane_list = [](const std::vector<int>& planes) {
    std::ostringstream os;
    for (size_t i = 0; i < planes.size(); ++i) os << (i ? "," : "") << planes[i];
    return os.str();
  };
  for (const auto& l : s.lines) {
    rep.max_line_mult = std::max(rep.max_line_mult, l.multiplicity());
    if (l.multiplicity() >= 4) {
      rep.admissible = false;
      rep.violations.push_back("line " + line_str(l) + " lies on " +
                               std::to_string(l.multiplicity()) + " planes {" +
                               plane_list(l.planes) + "}");
    }
  }
  for (const auto& p : s.points) {
    rep.max_point_mult = std::max(rep.max_point_mult, p.multiplicity());
    if (p.multiplicity() >= 6) {
      rep.admissible = false;
      rep.violations.push_back("point " + point_str(p.point) + " lies on " +
                               std::to_string(p.multiplicity()) + " planes {" +
                               plane_list(p.planes) + "}");
    }
  }
  return rep;
}

}  // namespace octic
