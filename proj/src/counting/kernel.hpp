#pragma once

#include <cstdint>

#include "octic/counting.hpp"

// Shared contract for the row kernels.  A "row" is a line of consecutive
// points along the innermost chart coordinate: form i takes the value
// (base[i] + k*step[i]) mod p at the k-th point, k = 0..len-1.  The kernel
// multiplies the 8 form values mod p and accumulates the quadratic
// character and the zero count of the product.  All inputs are reduced
// (base[i], step[i] < p); chi points at the FpChi table of size p.

namespace octic {

struct RowAccum {
  long long chi_sum = 0;
  long long zeros = 0;
};

using RowFn = RowAccum (*)(const uint32_t* base, const uint32_t* step,
                           uint32_t len, const int32_t* chi, uint32_t p);

RowAccum row_scalar(const uint32_t* base, const uint32_t* step, uint32_t len,
                    const int32_t* chi, uint32_t p);

#if defined(OCTIC_HAVE_AVX2_BUILD)
// Compiled with -mavx2; call only after a runtime CPU check and for
// p < kAvx2PrimeLimit so lane products stay below 2^30.
RowAccum row_avx2(const uint32_t* base, const uint32_t* step, uint32_t len,
                  const int32_t* chi, uint32_t p);
#endif

// Resolve a kernel request against build flags, CPU features and the prime;
// Invalid when an explicitly requested variant is unavailable.
RowFn select_row_kernel(CountKernel k, uint32_t p);

}  // namespace octic
