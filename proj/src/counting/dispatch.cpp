#include "kernel.hpp"
#include "octic/counting.hpp"
#include "octic/error.hpp"

namespace octic {

const char* kernel_name(CountKernel k) {
  switch (k) {
    case CountKernel::Auto: return "auto";
    case CountKernel::Scalar: return "scalar";
    case CountKernel::Avx2: return "avx2";
  }
  return "?";
}

bool avx2_supported() {
#if defined(OCTIC_HAVE_AVX2_BUILD)
  return __builtin_cpu_supports("avx2");
#else
  return false;
#endif
}

RowFn select_row_kernel(CountKernel k, uint32_t p) {
  switch (k) {
    case CountKernel::Scalar:
      return row_scalar;
    case CountKernel::Avx2:
#if defined(OCTIC_HAVE_AVX2_BUILD)
      if (!avx2_supported()) fail(Err::Invalid, "avx2 not supported on this CPU");
      if (p >= kAvx2PrimeLimit)
        fail(Err::Invalid, "avx2 kernel requires p < " + std::to_string(kAvx2PrimeLimit));
      return row_avx2;
#else
      fail(Err::Invalid, "avx2 kernel not compiled in");
#endif
    case CountKernel::Auto:
#if defined(OCTIC_HAVE_AVX2_BUILD)
      if (avx2_supported() && p < kAvx2PrimeLimit) return row_avx2;
#endif
      return row_scalar;
  }
  return row_scalar;
}

}  // namespace octic
