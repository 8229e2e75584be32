#include "octic/conditions.hpp"

#include <sstream>

namespace octic {

namespace {

bool lines_equal(const std::array<std::array<Rat, 4>, 2>& a,
                 const std::array<std::array<Rat, 4>, 2>& b) {
  // Both bases are RREF-canonical, so subspace equality is array equality.
  return a == b;
}

bool line_in_plane(const std::array<std::array<Rat, 4>, 2>& basis,
                   const std::array<Rat, 4>& normal) {
  RatField f;
  return f.is_zero(dot4(f, normal, basis[0])) && f.is_zero(dot4(f, normal, basis[1]));
}

std::string plane_list(const std::vector<int>& planes) {
  std::ostringstream os;
  for (size_t i = 0; i < planes.size(); ++i) os << (i ? "," : "") << planes[i];
  return os.str();
}

void check_one_line_contact(const Arrangement& arr,
                            const std::array<std::array<Rat, 4>, 2>& basis,
                            const char* tag, ConditionResult* res) {
  LineDivisor div = restrict_to_line(arr, basis[0], basis[1]);
  for (int idx : div.contained) {
    res->pass = false;
    res->witnesses.push_back(std::string("fixed line ") + tag +
                             " lies inside branch plane " + std::to_string(idx) +
                             " [manual review]");
  }
  int odd = div.odd_count();
  if (odd > 2) {
    res->pass = false;
    res->witnesses.push_back(std::string("fixed line ") + tag + " meets the octic in " +
                             std::to_string(odd) +
                             " odd-multiplicity points: " + div.str());
  }
}

}  // namespace

FixedCurveReport check_fixed_curves(const Arrangement& arr,
                                    const Strata<RatField>& strata,
                                    const FixedLocus& locus, const QMat& n) {
  FixedCurveReport rep;
  rep.fixed_singular_line.name = "no_fixed_singular_line";
  rep.fourfold_point_planes.name = "fourfold_planes_moved";
  rep.odd_contact.name = "odd_contact_bound";

  // 1. pointwise-fixed singular lines
  for (const auto& line : strata.lines) {
    bool fixed = false;
    if (locus.kind == FixedLocus::Kind::TwoLines) {
      fixed = lines_equal(line.basis, locus.line_plus) ||
              lines_equal(line.basis, locus.line_minus);
    } else {
      // every line inside the pointwise-fixed plane is pointwise fixed
      fixed = line_in_plane(line.basis, locus.plane_normal);
    }
    if (fixed) {
      rep.fixed_singular_line.pass = false;
      rep.fixed_singular_line.witnesses.push_back(
          "singular line " + line_str(line) + " on planes {" +
          plane_list(line.planes) + "} is pointwise fixed");
    }
  }

  // 2. planes through fourfold points must move
  auto normals = arr.rational_normals();
  for (const auto& pt : strata.points) {
    if (pt.multiplicity() != 4) continue;
    for (int idx : pt.planes) {
      if (plane_invariant(normals[idx - 1], n)) {
        rep.fourfold_point_planes.pass = false;
        rep.fourfold_point_planes.witnesses.push_back(
            "plane " + std::to_string(idx) + " through fourfold point " +
            point_str(pt.point) + (pt.on_triple_line ? " (on a triple line)" : "") +
            " is invariant");
      }
    }
  }

  // 3. contact of the fixed curves with the branch octic
  if (locus.kind == FixedLocus::Kind::TwoLines) {
    check_one_line_contact(arr, locus.line_plus, "(+1)", &rep.odd_contact);
    check_one_line_contact(arr, locus.line_minus, "(-1)", &rep.odd_contact);
  } else {
    // With a pointwise-fixed plane pi the u-coordinate flips there, so the
    // fixed curve upstairs is the full restricted octic inside the branch
    // surface; every component needs manual review.
    for (size_t i = 0; i < normals.size(); ++i) {
      auto c = [&] {
        for (int k = 0; k < 4; ++k)
          if (normals[i][k] != locus.plane_normal[k]) return false;
        return true;
      }();
      if (c) {
        rep.odd_contact.pass = false;
        rep.odd_contact.witnesses.push_back(
            "fixed plane coincides with branch plane " + std::to_string(i + 1) +
            " [manual review]");
      }
    }
    rep.odd_contact.pass = false;
    rep.odd_contact.witnesses.push_back(
        "fixed curve over plane " + vec4_str(locus.plane_normal) +
        "=0 is the restricted octic inside the branch surface [manual review]");
  }
  return rep;
}

}  // namespace octic
