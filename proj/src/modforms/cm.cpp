#include "octic/error.hpp"
#include "octic/modforms.hpp"

namespace octic {

std::pair<long long, long long> primary_gaussian(uint32_t p) {
  if (!is_prime_u32(p) || p % 4 != 1) {
    fail(Err::Invalid, std::to_string(p) + " is not a prime = 1 mod 4");
  }
  // p = a^2 + b^2 with a odd, b even (unique up to signs); brute force is
  // fine at table scale.
  long long a = 0, b = 0;
  for (long long x = 1; x * x <= p; x += 2) {
    long long rest = (long long)p - x * x;
    long long y = 0;
    while (y * y < rest) ++y;
    if (y * y == rest) {
      a = x;
      b = y;
      break;
    }
  }
  if (a == 0) fail(Err::Invalid, "no two-square decomposition found");
  // Primary normalization a + b = 1 mod 4 picks one of {a, -a}; flipping b
  // does not change a + b mod 4 since b is even, so b's sign is free and
  // Re(pi^k) is well defined.
  auto mod4 = [](long long v) { return ((v % 4) + 4) % 4; };
  if (mod4(a + b) != 1) a = -a;
  if (mod4(a + b) != 1) fail(Err::Invalid, "primary normalization failed");
  return {a, b};
}

long long ap_cm_weight4(uint32_t p, int epsilon) {
  if (epsilon != 1 && epsilon != -1) {
    fail(Err::Invalid, "calibration epsilon must be +1 or -1");
  }
  if (!is_prime_u32(p) || p == 2) {
    fail(Err::Invalid, std::to_string(p) + " is not an odd prime");
  }
  if (p % 4 == 3) return 0;  // inert primes: a_p vanishes for CM forms
  auto [a, b] = primary_gaussian(p);
  // 2 Re(pi^3) = 2(a^3 - 3 a b^2)
  return epsilon * 2 * (a * a * a - 3 * a * b * b);
}

}  // namespace octic
