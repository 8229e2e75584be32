#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <random>
#include <vector>

#include "../src/counting/kernel.hpp"
#include <doctest.h>
#include "octic/counting.hpp"

using namespace octic;

// The AVX2 row kernel must produce the same integers as the scalar
// reference on every input, not just on honest arrangements: rows here are
// arbitrary reduced (base, step) pairs, including zero forms.

namespace {

FpOctic random_octic(std::mt19937& rng, uint32_t p) {
  FpOctic o;
  o.p = p;
  std::uniform_int_distribution<uint32_t> d(0, p - 1);
  for (auto& pl : o.planes)
    for (auto& c : pl) c = d(rng);
  return o;
}

}  // namespace

TEST_CASE("kernel dispatch") {
  CHECK(std::string(kernel_name(CountKernel::Auto)) == "auto");
  CHECK(std::string(kernel_name(CountKernel::Scalar)) == "scalar");
  CHECK(std::string(kernel_name(CountKernel::Avx2)) == "avx2");
  CHECK(select_row_kernel(CountKernel::Scalar, 3) == &row_scalar);
  if (avx2_supported()) {
    CHECK(select_row_kernel(CountKernel::Avx2, 32749) != nullptr);
    // lane products only stay exact below 2^15
    CHECK_THROWS_AS(select_row_kernel(CountKernel::Avx2, 32771), OcticError);
    CHECK(select_row_kernel(CountKernel::Auto, 32771) == &row_scalar);
  } else {
    CHECK_THROWS_AS(select_row_kernel(CountKernel::Avx2, 97), OcticError);
    CHECK(select_row_kernel(CountKernel::Auto, 97) == &row_scalar);
  }
}

TEST_CASE("row kernels agree on random rows") {
  if (!avx2_supported()) {
    MESSAGE("AVX2 not available on this CPU; row equivalence not exercised");
    return;
  }
  std::mt19937 rng(911);
  for (uint32_t p : {3u, 5u, 31u, 257u, 4099u, 32749u}) {
    CAPTURE(p);
    RowFn scalar = select_row_kernel(CountKernel::Scalar, p);
    RowFn avx2 = select_row_kernel(CountKernel::Avx2, p);
    FpChi chi(p);
    std::uniform_int_distribution<uint32_t> d(0, p - 1);
    for (uint32_t len : {1u, 2u, 7u, 8u, 9u, 16u, 31u, 200u}) {
      for (int trial = 0; trial < 8; ++trial) {
        std::array<uint32_t, 8> base{}, step{};
        for (int i = 0; i < 8; ++i) {
          base[i] = d(rng);
          step[i] = d(rng);
        }
        if (trial == 0) base.fill(0);      // all-zero forms
        if (trial == 1) step.fill(0);      // constant rows
        auto a = scalar(base.data(), step.data(), len, chi.data(), p);
        auto b = avx2(base.data(), step.data(), len, chi.data(), p);
        CAPTURE(len);
        CAPTURE(trial);
        CHECK(a.chi_sum == b.chi_sum);
        CHECK(a.zeros == b.zeros);
      }
    }
  }
}

TEST_CASE("full counts agree across kernels and job counts") {
  if (!avx2_supported()) {
    MESSAGE("AVX2 not available on this CPU; using scalar only");
    return;
  }
  std::mt19937 rng(912);
  for (uint32_t p : {3u, 5u, 17u, 31u, 101u}) {
    CAPTURE(p);
    for (int trial = 0; trial < 3; ++trial) {
      FpOctic oct = random_octic(rng, p);
      auto s = count_double_cover(oct, 1, CountKernel::Scalar);
      auto v = count_double_cover(oct, 1, CountKernel::Avx2);
      auto vj = count_double_cover(oct, 3, CountKernel::Avx2);
      auto sj = count_double_cover(oct, 8, CountKernel::Scalar);
      CHECK(s.n_points == v.n_points);
      CHECK(s.character_sum == v.character_sum);
      CHECK(s.zero_count == v.zero_count);
      CHECK(s.n_points == vj.n_points);
      CHECK(s.character_sum == vj.character_sum);
      CHECK(s.zero_count == vj.zero_count);
      CHECK(s.n_points == sj.n_points);
    }
  }
}

TEST_CASE("explicit avx2 request fails above the prime limit") {
  if (!avx2_supported()) return;
  FpOctic oct;
  oct.p = 32771;  // prime, but >= 2^15
  for (auto& pl : oct.planes) pl = {1, 1, 1, 1};
  CHECK_THROWS_AS(count_double_cover(oct, 1, CountKernel::Avx2), OcticError);
}
