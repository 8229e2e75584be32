#include "kernel.hpp"

namespace octic {

// Reference kernel: 8 conditional-subtract additions, 7 word
// multiplications with one reduction each, 1 table lookup per point.
RowAccum row_scalar(const uint32_t* base, const uint32_t* step, uint32_t len,
                    const int32_t* chi, uint32_t p) {
  uint32_t v[8];
  for (int i = 0; i < 8; ++i) v[i] = base[i];
  RowAccum acc;
  for (uint32_t k = 0; k < len; ++k) {
    uint64_t f = v[0];
    for (int i = 1; i < 8; ++i) f = f * v[i] % p;
    acc.chi_sum += chi[f];
    acc.zeros += (f == 0);
    for (int i = 0; i < 8; ++i) {
      v[i] += step[i];
      if (v[i] >= p) v[i] -= p;
    }
  }
  return acc;
}

}  // namespace octic
