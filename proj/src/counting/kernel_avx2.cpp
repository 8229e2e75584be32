#include "kernel.hpp"

#if defined(OCTIC_HAVE_AVX2_BUILD)

#include <immintrin.h>

namespace octic {

namespace {

// Barrett reduction of 8 u32 lanes (values < 2^30) to [0, p), p < 2^15.
// With m = floor(2^32 / p) and q = (x*m) >> 32, the remainder x - q*p lies
// in [0, 2p), so one masked subtract finishes the job.
inline __m256i barrett8(__m256i x, __m256i vm, __m256i vp) {
  __m256i xo = _mm256_srli_epi64(x, 32);
  __m256i qe = _mm256_srli_epi64(_mm256_mul_epu32(x, vm), 32);
  __m256i qo = _mm256_srli_epi64(_mm256_mul_epu32(xo, vm), 32);
  __m256i q = _mm256_blend_epi32(qe, _mm256_slli_epi64(qo, 32), 0xAA);
  __m256i r = _mm256_sub_epi32(x, _mm256_mullo_epi32(q, vp));
  __m256i lt = _mm256_cmpgt_epi32(vp, r);  // r < p ?
  return _mm256_sub_epi32(r, _mm256_andnot_si256(lt, vp));
}

// v + s mod p for lanes already in [0, p), s in [0, p).
inline __m256i add_mod8(__m256i v, __m256i s, __m256i vp) {
  __m256i r = _mm256_add_epi32(v, s);
  __m256i lt = _mm256_cmpgt_epi32(vp, r);
  return _mm256_sub_epi32(r, _mm256_andnot_si256(lt, vp));
}

inline long long hsum32(__m256i v) {
  alignas(32) int32_t lane[8];
  _mm256_store_si256(reinterpret_cast<__m256i*>(lane), v);
  long long s = 0;
  for (int i = 0; i < 8; ++i) s += lane[i];
  return s;
}

}  // namespace

// Vector variant: 8 consecutive points per iteration, one register of form
// values per plane.  Products of lanes < p < 2^15 stay below 2^30, so the
// low 32-bit multiply is exact and barrett8 brings it back under p.
RowAccum row_avx2(const uint32_t* base, const uint32_t* step, uint32_t len,
                  const int32_t* chi, uint32_t p) {
  const uint32_t blocks = len / 8;
  RowAccum acc;
  if (blocks) {
    const __m256i vp = _mm256_set1_epi32(static_cast<int>(p));
    const __m256i vm = _mm256_set1_epi64x(
        static_cast<long long>((uint64_t(1) << 32) / p));
    __m256i v[8], stride[8];
    for (int i = 0; i < 8; ++i) {
      alignas(32) uint32_t lane[8];
      for (int k = 0; k < 8; ++k)
        lane[k] = static_cast<uint32_t>((base[i] + uint64_t(k) * step[i]) % p);
      v[i] = _mm256_load_si256(reinterpret_cast<const __m256i*>(lane));
      stride[i] = _mm256_set1_epi32(static_cast<int>((uint64_t(8) * step[i]) % p));
    }
    __m256i chi_acc = _mm256_setzero_si256();
    __m256i zero_acc = _mm256_setzero_si256();
    const __m256i vzero = _mm256_setzero_si256();
    for (uint32_t b = 0; b < blocks; ++b) {
      __m256i f = v[0];
      for (int i = 1; i < 8; ++i)
        f = barrett8(_mm256_mullo_epi32(f, v[i]), vm, vp);
      chi_acc = _mm256_add_epi32(
          chi_acc, _mm256_i32gather_epi32(chi, f, 4));
      zero_acc = _mm256_sub_epi32(zero_acc, _mm256_cmpeq_epi32(f, vzero));
      for (int i = 0; i < 8; ++i) v[i] = add_mod8(v[i], stride[i], vp);
    }
    acc.chi_sum = hsum32(chi_acc);
    acc.zeros = hsum32(zero_acc);
  }
  // leftover points: defer to the scalar reference from the right offset
  uint32_t done = blocks * 8;
  if (done < len) {
    uint32_t tail_base[8];
    for (int i = 0; i < 8; ++i)
      tail_base[i] = static_cast<uint32_t>((base[i] + uint64_t(done) * step[i]) % p);
    RowAccum t = row_scalar(tail_base, step, len - done, chi, p);
    acc.chi_sum += t.chi_sum;
    acc.zeros += t.zeros;
  }
  return acc;
}

}  // namespace octic

#endif  // OCTIC_HAVE_AVX2_BUILD
