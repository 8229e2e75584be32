#include "octic/counting.hpp"

#include <memory>

#include "octic/error.hpp"

namespace octic {

bool is_prime_u32(uint32_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (uint32_t d = 3; uint64_t(d) * d <= n; d += 2)
    if (n % d == 0) return false;
  return true;
}

FpChi::FpChi(uint32_t p_) : p(p_) {
  table.assign(p, -1);
  table[0] = 0;
  for (uint32_t r = 1; r < p; ++r) table[uint64_t(r) * r % p] = 1;
}

int quad_char(uint32_t a, uint32_t p) {
  thread_local std::unique_ptr<FpChi> cached;
  if (!cached || cached->p != p) cached = std::make_unique<FpChi>(p);
  return cached->table[a % p];
}

namespace {

// Reduce one rational coefficient mod p; the canonicalized planes carry
// integer entries, but a unit denominator is handled for safety.
uint32_t rat_mod_p(const Rat& r, uint32_t p) {
  uint32_t num = mpz_fdiv_ui(r.num().get_mpz_t(), p);
  uint32_t den = mpz_fdiv_ui(r.den().get_mpz_t(), p);
  if (den == 0) fail(Err::BadReduction, "denominator divisible by " + std::to_string(p));
  if (den == 1) return num;
  return FpField{p}.mul(num, FpField{p}.inv(den));
}

}  // namespace

FpOctic reduce_mod_p(const Arrangement& arr, uint32_t p) {
  if (p < 3 || !is_prime_u32(p))
    fail(Err::BadReduction, "p = " + std::to_string(p) + " is not an odd prime");
  auto normals = arr.rational_normals();
  FpOctic oct;
  oct.p = p;
  for (size_t i = 0; i < normals.size(); ++i)
    for (int j = 0; j < 4; ++j) oct.planes[i][j] = rat_mod_p(normals[i][j], p);

  FpField f{p};
  std::array<std::array<uint32_t, 4>, 8> unit{};  // scaled to leading 1
  for (int i = 0; i < 8; ++i) {
    int lead = -1;
    for (int j = 0; j < 4; ++j)
      if (oct.planes[i][j] != 0) { lead = j; break; }
    if (lead < 0)
      fail(Err::BadReduction,
           "plane " + std::to_string(i + 1) + " vanishes mod " + std::to_string(p));
    uint32_t inv = f.inv(oct.planes[i][lead]);
    for (int j = 0; j < 4; ++j) unit[i][j] = f.mul(oct.planes[i][j], inv);
  }
  for (int i = 0; i < 8; ++i)
    for (int j = i + 1; j < 8; ++j)
      if (unit[i] == unit[j])
        fail(Err::BadReduction, "planes " + std::to_string(i + 1) + "," +
                                    std::to_string(j + 1) + " collide mod " +
                                    std::to_string(p));
  return oct;
}

}  // namespace octic
