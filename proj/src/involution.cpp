#include "octic/involution.hpp"

#include <sstream>

#include "octic/error.hpp"
#include "octic/linalg.hpp"

namespace octic {

InvolutionScaling involution_normalize(const QMat& m) {
  QMat sq = mat_mul(m, m);
  Rat c = sq[0][0];
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      const Rat& want = (i == j) ? c : Rat(0);
      if (sq[i][j] != want)
        fail(Err::NotInvolution, "M^2 is not scalar: entry (" + std::to_string(i) +
                                     "," + std::to_string(j) + ") = " +
                                     sq[i][j].str());
    }
  if (c.is_zero()) fail(Err::NotInvolution, "M^2 = 0, matrix is singular");
  Rat r;
  if (!c.square_root(&r))
    fail(Err::IrrationalNormalization,
         "M^2 = " + c.str() + " * I but the scalar is not a rational square");
  InvolutionScaling out;
  out.c = c;
  out.r = r;
  Rat inv = r.inv();
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) out.n[i][j] = m[i][j] * inv;
  return out;
}

RatFunc symplectic_lambda(const WeightedMap& wm) {
  if (wm.u_coeff.is_zero())
    fail(Err::Invalid, "u coefficient must be nonzero");
  MPoly det = mat_det(wm.m);
  if (det.is_zero()) fail(Err::Invalid, "map matrix is singular");
  return RatFunc(det, wm.u_coeff);
}

FixedLocus fixed_locus(const QMat& n) {
  RatField f;
  auto eigenspace = [&](int sign) {
    std::vector<std::array<Rat, 4>> rows;
    for (int i = 0; i < 4; ++i) {
      std::array<Rat, 4> row;
      for (int j = 0; j < 4; ++j)
        row[j] = n[i][j] - Rat(i == j ? sign : 0);
      rows.push_back(row);
    }
    return kernel4(f, rows);
  };
  auto vp = eigenspace(1), vm = eigenspace(-1);
  size_t dp = vp.size(), dm = vm.size();
  if (dp + dm != 4)
    fail(Err::NotInvolution, "matrix is not involutive (eigenspaces do not split)");
  if (dp == 4 || dm == 4)
    fail(Err::IdentityMap, "map is the identity on P^3; no isolated fixed locus");

  FixedLocus out;
  if (dp == 2) {
    out.kind = FixedLocus::Kind::TwoLines;
    std::vector<std::array<Rat, 4>> bp(vp.begin(), vp.end());
    std::vector<std::array<Rat, 4>> bm(vm.begin(), vm.end());
    rref(f, bp);
    rref(f, bm);
    out.line_plus = {bp[0], bp[1]};
    out.line_minus = {bm[0], bm[1]};
    return out;
  }
  out.kind = FixedLocus::Kind::PointPlane;
  const auto& point_side = (dp == 1) ? vp : vm;
  const auto& plane_side = (dp == 1) ? vm : vp;
  out.plane_eigenvalue = (dp == 1) ? -1 : 1;
  out.point = primitive_vec4(point_side[0]);
  std::vector<std::array<Rat, 4>> rows(plane_side.begin(), plane_side.end());
  auto normal = kernel4(f, rows);
  out.plane_normal = primitive_vec4(normal[0]);
  return out;
}

std::string FixedLocus::str() const {
  std::ostringstream os;
  if (kind == Kind::PointPlane) {
    os << "point " << vec4_str(point) << " + plane " << vec4_str(plane_normal)
       << "=0 (eigenvalue " << (plane_eigenvalue > 0 ? "+1" : "-1") << ")";
  } else {
    os << "lines span{" << vec4_str(primitive_vec4(line_plus[0])) << ","
       << vec4_str(primitive_vec4(line_plus[1])) << "} (+1) and span{"
       << vec4_str(primitive_vec4(line_minus[0])) << ","
       << vec4_str(primitive_vec4(line_minus[1])) << "} (-1)";
  }
  return os.str();
}

namespace {

// Normal of l  composed with v -> N v, i.e. N^T n.
std::array<Rat, 4> composed_normal(const std::array<Rat, 4>& n, const QMat& m) {
  std::array<Rat, 4> out{};
  for (int j = 0; j < 4; ++j) {
    Rat acc(0);
    for (int i = 0; i < 4; ++i) acc += m[i][j] * n[i];
    out[j] = acc;
  }
  return out;
}

// c with a = c * b, or nullopt.
std::optional<Rat> proportionality(const std::array<Rat, 4>& a,
                                   const std::array<Rat, 4>& b) {
  Rat c;
  bool have = false;
  for (int i = 0; i < 4; ++i) {
    if (b[i].is_zero()) {
      if (!a[i].is_zero()) return std::nullopt;
      continue;
    }
    Rat ci = a[i] / b[i];
    if (!have) {
      c = ci;
      have = true;
    } else if (ci != c) {
      return std::nullopt;
    }
  }
  if (!have) return std::nullopt;
  return c;
}

}  // namespace

bool plane_invariant(const std::array<Rat, 4>& normal, const QMat& n) {
  return proportionality(composed_normal(normal, n), normal).has_value();
}

OcticInvariance octic_invariance(const Arrangement& specialized, const QMat& n) {
  auto normals = specialized.rational_normals();
  OcticInvariance out;
  out.kappa = Rat(1);
  out.perm.assign(normals.size(), 0);
  for (size_t i = 0; i < normals.size(); ++i) {
    auto comp = composed_normal(normals[i], n);
    bool matched = false;
    for (size_t j = 0; j < normals.size(); ++j) {
      auto c = proportionality(comp, normals[j]);
      if (c) {
        out.kappa *= *c;
        out.perm[i] = static_cast<int>(j + 1);
        matched = true;
        break;
      }
    }
    if (!matched)
      fail(Err::NotPreserved,
           "image of plane " + std::to_string(i + 1) +
               " is no plane of the arrangement: normal " + vec4_str(comp));
  }
  return out;
}

}  // namespace octic
