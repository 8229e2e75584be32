#include "octic/counting.hpp"
#include "octic/error.hpp"
#include "octic/strata.hpp"

namespace octic {

// Combinatorial stability: a prime is usable when reduction keeps 8
// distinct nonzero planes and the singular-stratum shape (line
// multiplicities, point profiles with triple-line flags) is unchanged.
// This can be stricter than the true conductor condition; callers surface
// the per-prime reasons.
std::vector<uint32_t> good_primes(const Arrangement& arr, uint32_t lo, uint32_t hi,
                                  std::vector<std::string>* excluded) {
  auto note = [&](uint32_t p, const std::string& why) {
    if (excluded) excluded->push_back(std::to_string(p) + ": " + why);
  };
  std::vector<uint32_t> out;
  auto sig_q =
      strata_signature(singular_strata(RatField{}, arr.rational_normals()));
  if (lo <= 2 && hi >= 2) note(2, "p = 2 unsupported");
  for (uint32_t p = std::max(lo, 3u); p <= hi; ++p) {
    if (!is_prime_u32(p)) continue;
    FpOctic oct;
    try {
      oct = reduce_mod_p(arr, p);
    } catch (const OcticError& e) {
      note(p, e.what());
      continue;
    }
    FpField f{p};
    std::vector<std::array<uint32_t, 4>> normals;
    for (const auto& pl : oct.planes) normals.push_back(pl);
    auto sig_p = strata_signature(singular_strata(f, normals));
    if (sig_p == sig_q)
      out.push_back(p);
    else
      note(p, "singular strata degenerate mod p");
  }
  return out;
}

}  // namespace octic
