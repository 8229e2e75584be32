#include "octic/error.hpp"
#include "octic/modforms.hpp"

namespace octic {

long long ap_elliptic(const EllipticCurveModel& e, uint32_t p) {
  if (p < 3 || !is_prime_u32(p)) {
    fail(Err::BadReduction,
         "a_p oracle needs an odd prime, got " + std::to_string(p));
  }
  auto modp = [&](long long v) -> uint32_t {
    long long r = v % (long long)p;
    if (r < 0) r += p;
    return (uint32_t)r;
  };
  // 4a^3 + 27b^2 mod p without overflow: reduce first, multiply in u64.
  uint64_t ar = modp(e.a), br = modp(e.b);
  uint64_t disc = (4 * ((ar * ar % p) * ar % p) + 27 * (br * br % p)) % p;
  if (disc == 0) {
    fail(Err::BadReduction, "curve y^2 = x^3 + " + std::to_string(e.a) +
                                "x + " + std::to_string(e.b) +
                                " is singular mod " + std::to_string(p));
  }
  FpChi chi(p);
  const int32_t* ct = chi.data();
  // #E(F_p) = 1 + sum_x (1 + chi(x^3 + ax + b));  a_p = p + 1 - #E.
  long long s = 0;
  for (uint64_t x = 0; x < p; ++x) {
    uint64_t fx = ((x * x % p) * x + ar * x + br) % p;
    s += ct[fx];
  }
  return -s;
}

}  // namespace octic
