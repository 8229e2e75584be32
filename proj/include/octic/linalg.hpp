#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "octic/rat.hpp"

namespace octic {

// Field trait objects so the rank/kernel/echelon routines run both over Q
// (exact certification) and over F_p (reduction checks).

struct RatField {
  using Elt = Rat;
  Elt zero() const { return Rat(0); }
  Elt one() const { return Rat(1); }
  bool is_zero(const Elt& a) const { return a.is_zero(); }
  bool eq(const Elt& a, const Elt& b) const { return a == b; }
  Elt add(const Elt& a, const Elt& b) const { return a + b; }
  Elt sub(const Elt& a, const Elt& b) const { return a - b; }
  Elt mul(const Elt& a, const Elt& b) const { return a * b; }
  Elt neg(const Elt& a) const { return a.neg(); }
  Elt inv(const Elt& a) const { return a.inv(); }
};

struct FpField {
  uint32_t p;
  using Elt = uint32_t;
  Elt zero() const { return 0; }
  Elt one() const { return 1 % p; }
  bool is_zero(Elt a) const { return a == 0; }
  bool eq(Elt a, Elt b) const { return a == b; }
  Elt add(Elt a, Elt b) const { return static_cast<uint32_t>((uint64_t(a) + b) % p); }
  Elt sub(Elt a, Elt b) const { return static_cast<uint32_t>((uint64_t(a) + p - b) % p); }
  Elt mul(Elt a, Elt b) const { return static_cast<uint32_t>(uint64_t(a) * b % p); }
  Elt neg(Elt a) const { return a == 0 ? 0 : p - a; }
  Elt inv(Elt a) const {  // p prime, a != 0
    Elt r = 1, b = a;
    for (uint32_t e = p - 2; e; e >>= 1) {
      if (e & 1) r = mul(r, b);
      b = mul(b, b);
    }
    return r;
  }
};

template <class F>
using Vec4 = std::array<typename F::Elt, 4>;

// In-place reduced row echelon form; returns the rank.  The nonzero rows of
// the result are the canonical basis of the row span (zero rows trail).
template <class F>
int rref(const F& f, std::vector<std::array<typename F::Elt, 4>>& rows) {
  int rank = 0;
  for (int col = 0; col < 4 && rank < static_cast<int>(rows.size()); ++col) {
    int pivot = -1;
    for (int r = rank; r < static_cast<int>(rows.size()); ++r)
      if (!f.is_zero(rows[r][col])) { pivot = r; break; }
    if (pivot < 0) continue;
    std::swap(rows[rank], rows[pivot]);
    auto inv = f.inv(rows[rank][col]);
    for (int c = 0; c < 4; ++c) rows[rank][c] = f.mul(rows[rank][c], inv);
    for (int r = 0; r < static_cast<int>(rows.size()); ++r) {
      if (r == rank || f.is_zero(rows[r][col])) continue;
      auto m = rows[r][col];
      for (int c = 0; c < 4; ++c)
        rows[r][c] = f.sub(rows[r][c], f.mul(m, rows[rank][c]));
    }
    ++rank;
  }
  return rank;
}

template <class F>
int rank_of(const F& f, std::vector<std::array<typename F::Elt, 4>> rows) {
  return rref(f, rows);
}

// Basis of {v : R v = 0} for a stack of row vectors R (acting by dot
// product), via RREF back-substitution on the free columns.
template <class F>
std::vector<std::array<typename F::Elt, 4>> kernel4(
    const F& f, std::vector<std::array<typename F::Elt, 4>> rows) {
  int rank = rref(f, rows);
  std::array<int, 4> pivot_col{-1, -1, -1, -1};
  std::array<bool, 4> is_pivot{};
  for (int r = 0; r < rank; ++r)
    for (int c = 0; c < 4; ++c)
      if (!f.is_zero(rows[r][c])) {
        pivot_col[r] = c;
        is_pivot[c] = true;
        break;
      }
  std::vector<std::array<typename F::Elt, 4>> basis;
  for (int free_c = 0; free_c < 4; ++free_c) {
    if (is_pivot[free_c]) continue;
    std::array<typename F::Elt, 4> v{f.zero(), f.zero(), f.zero(), f.zero()};
    v[free_c] = f.one();
    for (int r = 0; r < rank; ++r)
      v[pivot_col[r]] = f.neg(rows[r][free_c]);
    basis.push_back(v);
  }
  return basis;
}

// Canonical projective representative over Q: integer entries with gcd 1,
// first nonzero entry positive.
std::array<Rat, 4> primitive_vec4(const std::array<Rat, 4>& v);
std::array<Rat, 2> primitive_vec2(const std::array<Rat, 2>& v);
std::string vec4_str(const std::array<Rat, 4>& v);

}  // namespace octic
