#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "octic/linalg.hpp"

namespace octic {

// Singular strata of a union of planes: the lines where >= 2 planes meet
// and the points where >= 3 planes with independent normals meet.  Works
// over any field (Q for certification, F_p for reduction checks), so the
// enumeration is templated on the field trait object.

template <class F>
struct LineStratum {
  // Canonical point basis of the line (RREF rows of a 2x4 matrix).
  std::array<std::array<typename F::Elt, 4>, 2> basis;
  std::vector<int> planes;  // 1-based indices of planes containing the line
  int multiplicity() const { return static_cast<int>(planes.size()); }
};

template <class F>
struct PointStratum {
  std::array<typename F::Elt, 4> point;  // canonical: first nonzero entry 1
  std::vector<int> planes;
  bool on_triple_line = false;
  int multiplicity() const { return static_cast<int>(planes.size()); }
};

template <class F>
struct Strata {
  std::vector<LineStratum<F>> lines;
  std::vector<PointStratum<F>> points;
};

template <class F>
bool point_on_line(const F& f, const LineStratum<F>& line,
                   const std::array<typename F::Elt, 4>& pt) {
  std::vector<std::array<typename F::Elt, 4>> rows = {line.basis[0], line.basis[1], pt};
  return rank_of(f, rows) == 2;
}

template <class F>
typename F::Elt dot4(const F& f, const std::array<typename F::Elt, 4>& a,
                     const std::array<typename F::Elt, 4>& b) {
  auto acc = f.zero();
  for (int i = 0; i < 4; ++i) acc = f.add(acc, f.mul(a[i], b[i]));
  return acc;
}

template <class F>
Strata<F> singular_strata(const F& f,
                          const std::vector<std::array<typename F::Elt, 4>>& normals) {
  using Elt = typename F::Elt;
  const int n = static_cast<int>(normals.size());
  Strata<F> out;

  // Lines: every pair of independent planes meets in a line; collect each
  // distinct line once with the full list of planes through it.
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      std::vector<std::array<Elt, 4>> rows = {normals[i], normals[j]};
      if (rref(f, rows) != 2) continue;  // proportional normals: no line
      LineStratum<F> line;
      auto pts = kernel4(f, rows);
      // kernel of a rank-2 system is 2-dimensional; canonicalize by RREF.
      std::vector<std::array<Elt, 4>> basis(pts.begin(), pts.end());
      rref(f, basis);
      line.basis = {basis[0], basis[1]};
      bool seen = false;
      for (const auto& other : out.lines)
        if (other.basis == line.basis) { seen = true; break; }
      if (seen) continue;
      for (int k = 0; k < n; ++k)
        if (f.is_zero(dot4(f, normals[k], line.basis[0])) &&
            f.is_zero(dot4(f, normals[k], line.basis[1])))
          line.planes.push_back(k + 1);
      out.lines.push_back(line);
    }
  }

  // Points: intersections of triples with independent normals.
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      for (int k = j + 1; k < n; ++k) {
        std::vector<std::array<Elt, 4>> rows = {normals[i], normals[j], normals[k]};
        if (rank_of(f, rows) != 3) continue;
        auto ker = kernel4(f, rows);
        std::array<Elt, 4> pt = ker[0];
        // canonical: scale so the first nonzero coordinate is 1
        for (int c = 0; c < 4; ++c) {
          if (!f.is_zero(pt[c])) {
            auto inv = f.inv(pt[c]);
            for (int d = 0; d < 4; ++d) pt[d] = f.mul(pt[d], inv);
            break;
          }
        }
        bool seen = false;
        for (const auto& other : out.points)
          if (other.point == pt) { seen = true; break; }
        if (seen) continue;
        PointStratum<F> ps;
        ps.point = pt;
        for (int m = 0; m < n; ++m)
          if (f.is_zero(dot4(f, normals[m], pt))) ps.planes.push_back(m + 1);
        out.points.push_back(ps);
      }
    }
  }
  for (auto& ps : out.points)
    for (const auto& line : out.lines)
      if (line.multiplicity() >= 3 && point_on_line(f, line, ps.point)) {
        ps.on_triple_line = true;
        break;
      }
  return out;
}

// Shape of the strata that must survive reduction mod p for a prime to be
// usable: the sorted line multiplicities and sorted point profiles.
struct StrataSignature {
  std::vector<int> line_mults;
  std::vector<std::pair<int, bool>> point_profile;  // (q, on_triple_line)
  friend bool operator==(const StrataSignature&, const StrataSignature&) = default;
  std::string str() const;
};

template <class F>
StrataSignature strata_signature(const Strata<F>& s) {
  StrataSignature sig;
  for (const auto& l : s.lines) sig.line_mults.push_back(l.multiplicity());
  for (const auto& p : s.points)
    sig.point_profile.emplace_back(p.multiplicity(), p.on_triple_line);
  std::sort(sig.line_mults.begin(), sig.line_mults.end());
  std::sort(sig.point_profile.begin(), sig.point_profile.end());
  return sig;
}

// A usable double octic: no point on 6 or more planes, no line on 4 or
// more planes.
struct AdmissibilityReport {
  bool admissible = true;
  std::vector<std::string> violations;
  int max_line_mult = 0;
  int max_point_mult = 0;
};

AdmissibilityReport admissibility(const Strata<RatField>& s);

std::string line_str(const LineStratum<RatField>& line);
std::string point_str(const std::array<Rat, 4>& pt);

}  // namespace octic
