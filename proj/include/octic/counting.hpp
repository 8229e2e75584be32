#pragma once

#include <chrono>
#include <cstdint>
#include <string>
#include <vector>

#include "octic/arrangement.hpp"

namespace octic {

// ---------------------------------------------------------------------------
// Finite-field data for the branch octic.  The degree-8 form is never
// expanded: it stays factored as 8 linear forms, so one point costs 8 dot
// products and 7 modular multiplications.
// ---------------------------------------------------------------------------

struct FpOctic {
  uint32_t p = 0;
  // planes[i][j]: coefficient of the j-th coordinate (x,y,z,t) of form i
  std::array<std::array<uint32_t, 4>, 8> planes{};
};

// Reduce a specialized (parameter-free) arrangement mod p.  BadReduction
// when p < 3, p is composite, a plane vanishes mod p, or two planes become
// proportional mod p.
FpOctic reduce_mod_p(const Arrangement& arr, uint32_t p);

// Quadratic character table of F_p: chi(0) = 0, chi(a) = +-1 by squaring
// every residue once.  The kernels index it per evaluated point.
struct FpChi {
  uint32_t p;
  std::vector<int32_t> table;  // size p, values in {-1, 0, +1}
  explicit FpChi(uint32_t p);
  const int32_t* data() const { return table.data(); }
};

// Legendre symbol of a mod p in {-1, 0, +1}; table-backed, with the table
// for the most recent p cached per thread.
int quad_char(uint32_t a, uint32_t p);

struct CountResult {
  uint32_t p = 0;
  long long n_points = 0;       // #{(x,u) : u^2 = f(x)} over P^3(F_p)
  long long character_sum = 0;  // sum over P^3(F_p) of chi(f(x))
  long long zero_count = 0;     // #{x in P^3(F_p) : f(x) = 0}
  std::chrono::nanoseconds elapsed{0};
};

// Row kernel selection.  Auto picks the widest variant the CPU supports for
// the given prime; the choice never changes the integers produced.
enum class CountKernel { Auto, Scalar, Avx2 };
const char* kernel_name(CountKernel k);
bool avx2_supported();
// AVX2 lanes reduce 30-bit products, so the vector path needs p < 2^15.
inline constexpr uint32_t kAvx2PrimeLimit = 1u << 15;

// Exact count of the double cover u^2 = f over P^3(F_p), iterated by the
// four affine charts (last nonzero coordinate = 1).  n_points equals
// (p^3+p^2+p+1) + character_sum; the chart decomposition is asserted to
// visit exactly that many points.  jobs > 1 splits the big chart by its
// outermost coordinate; results are identical for any job count.
CountResult count_double_cover(const FpOctic& oct, int jobs = 1,
                               CountKernel kernel = CountKernel::Auto);

// Odd primes in [lo, hi] where the arrangement keeps 8 distinct planes and
// the mod-p singular strata match the rational ones.  Rejected primes are
// reported as "p: reason" when excluded is non-null.
std::vector<uint32_t> good_primes(const Arrangement& arr, uint32_t lo, uint32_t hi,
                                  std::vector<std::string>* excluded = nullptr);

bool is_prime_u32(uint32_t n);

// ---------------------------------------------------------------------------
// Flat count cache: ASCII lines "p n_points character_sum", sorted by p.
// ---------------------------------------------------------------------------

struct CountCacheEntry {
  uint32_t p = 0;
  long long n_points = 0;
  long long character_sum = 0;
};

// Missing file loads as empty; malformed lines raise Parse.
std::vector<CountCacheEntry> load_count_cache(const std::string& path);
void save_count_cache(const std::string& path,
                      std::vector<CountCacheEntry> entries);

}  // namespace octic
