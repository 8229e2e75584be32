#include "octic/arrangement.hpp"

#include <sstream>

#include "octic/error.hpp"

namespace octic {

MPoly Plane::form() const {
  MPoly f;
  for (int i = 0; i < 4; ++i) f += c[i] * MPoly::variable(i);
  return f;
}

bool Plane::parametric() const {
  for (const auto& p : c)
    if (!p.is_constant()) return true;
  return false;
}

std::array<Rat, 4> Plane::rational_normal() const {
  std::array<Rat, 4> n;
  for (int i = 0; i < 4; ++i) {
    if (!c[i].is_constant())
      fail(Err::Invalid, "plane still depends on parameters: " + str());
    n[i] = c[i].constant_value();
  }
  return n;
}

std::string Plane::str() const {
  std::ostringstream os;
  bool some = false;
  for (int i = 0; i < 4; ++i) {
    if (c[i].is_zero()) continue;
    MPoly term = c[i] * MPoly::variable(i);
    if (some) os << " + ";
    if (c[i].is_constant() || c[i].terms().size() == 1)
      os << term.str();
    else
      os << "(" << c[i].str() << ")*" << var_name(i);
    some = true;
  }
  if (!some) os << "0";
  return os.str();
}

bool Arrangement::parametric() const {
  for (const auto& p : planes)
    if (p.parametric()) return true;
  return false;
}

MPoly Arrangement::octic() const {
  MPoly f(1);
  for (const auto& p : planes) f *= p.form();
  return f;
}

std::vector<std::array<Rat, 4>> Arrangement::rational_normals() const {
  std::vector<std::array<Rat, 4>> out;
  out.reserve(planes.size());
  for (const auto& p : planes) out.push_back(p.rational_normal());
  return out;
}

std::array<MPoly, 4> canonicalize_plane(const std::array<MPoly, 4>& c) {
  // Joint rational content of the four coefficient polynomials, sign fixed
  // by the leading coefficient of the first nonzero entry.
  mpz_class num_gcd = 0, den_lcm = 1;
  int lead_sign = 0;
  for (const auto& p : c) {
    if (p.is_zero()) continue;
    if (lead_sign == 0) lead_sign = p.leading_coeff().sign();
    Rat ct = p.content();
    num_gcd = gcd_z(num_gcd, ct.num());
    den_lcm = lcm_z(den_lcm, ct.den());
  }
  if (lead_sign == 0) fail(Err::DegeneratePlane, "plane with all coefficients zero");
  Rat scale = Rat::of(den_lcm, num_gcd);
  if (lead_sign < 0) scale = scale.neg();
  std::array<MPoly, 4> out;
  for (int i = 0; i < 4; ++i) out[i] = scale * c[i];
  return out;
}

bool planes_proportional(const Plane& p, const Plane& q) {
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j)
      if (p.c[i] * q.c[j] != p.c[j] * q.c[i]) return false;
  return true;
}

Arrangement make_arrangement(const std::string& name,
                             const std::vector<std::array<MPoly, 4>>& raw) {
  if (raw.size() != 8)
    fail(Err::Invalid, "arrangement needs exactly 8 planes, got " +
                           std::to_string(raw.size()));
  Arrangement arr;
  arr.name = name;
  for (size_t i = 0; i < raw.size(); ++i) {
    Plane p;
    try {
      p.c = canonicalize_plane(raw[i]);
    } catch (const OcticError& e) {
      if (e.kind == Err::DegeneratePlane)
        fail(Err::DegeneratePlane, "plane " + std::to_string(i + 1) + " of '" +
                                       name + "' is identically zero");
      throw;
    }
    p.index = static_cast<int>(i + 1);
    arr.planes.push_back(p);
  }
  for (size_t i = 0; i < arr.planes.size(); ++i)
    for (size_t j = i + 1; j < arr.planes.size(); ++j)
      if (planes_proportional(arr.planes[i], arr.planes[j]))
        fail(Err::DuplicatePlanes, "planes " + std::to_string(i + 1) + " and " +
                                       std::to_string(j + 1) + " of '" + name +
                                       "' coincide");
  return arr;
}

Arrangement specialize(const Arrangement& arr, const Rat& a, const Rat& b) {
  std::vector<std::array<MPoly, 4>> rows;
  std::array<const Rat*, kNVars> vals{};
  vals[VA] = &a;
  vals[VB] = &b;
  for (const auto& p : arr.planes) {
    std::array<MPoly, 4> row;
    for (int i = 0; i < 4; ++i) {
      row[i] = p.c[i].eval_partial(vals);
      if (!row[i].is_constant())
        fail(Err::Invalid, "plane coefficients must involve only A,B: " + p.str());
    }
    rows.push_back(row);
  }
  std::string name = arr.name + "@(" + a.str() + "," + b.str() + ")";
  try {
    return make_arrangement(name, rows);
  } catch (const OcticError& e) {
    if (e.kind == Err::DegeneratePlane || e.kind == Err::DuplicatePlanes)
      fail(e.kind, std::string(e.what()) + " [specialization degenerates]");
    throw;
  }
}

}  // namespace octic
