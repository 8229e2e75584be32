#include "octic/linalg.hpp"

#include <sstream>

#include "octic/error.hpp"

namespace octic {

namespace {

template <size_t N>
std::array<Rat, N> primitive_impl(const std::array<Rat, N>& v) {
  mpz_class num_gcd = 0, den_lcm = 1;
  int lead_sign = 0;
  for (const Rat& x : v) {
    if (x.is_zero()) continue;
    if (lead_sign == 0) lead_sign = x.sign();
    num_gcd = gcd_z(num_gcd, x.num());
    den_lcm = lcm_z(den_lcm, x.den());
  }
  if (lead_sign == 0) fail(Err::Invalid, "zero vector has no projective representative");
  Rat scale = Rat::of(den_lcm, num_gcd);
  if (lead_sign < 0) scale = scale.neg();
  std::array<Rat, N> out;
  for (size_t i = 0; i < N; ++i) out[i] = v[i] * scale;
  return out;
}

}  // namespace

std::array<Rat, 4> primitive_vec4(const std::array<Rat, 4>& v) { return primitive_impl<4>(v); }
std::array<Rat, 2> primitive_vec2(const std::array<Rat, 2>& v) { return primitive_impl<2>(v); }

std::string vec4_str(const std::array<Rat, 4>& v) {
  std::ostringstream os;
  os << "(";
  for (int i = 0; i < 4; ++i) os << (i ? ":" : "") << v[i].str();
  os << ")";
  return os.str();
}

}  // namespace octic
