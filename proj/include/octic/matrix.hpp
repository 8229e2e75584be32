#pragma once

#include <array>

#include "octic/linalg.hpp"
#include "octic/mpoly.hpp"

namespace octic {

template <class K>
struct Mat4 {
  std::array<std::array<K, 4>, 4> a{};
  std::array<K, 4>& operator[](int i) { return a[i]; }
  const std::array<K, 4>& operator[](int i) const { return a[i]; }
  friend bool operator==(const Mat4&, const Mat4&) = default;
};

using PMat = Mat4<MPoly>;   // entries polynomial in A, B
using QMat = Mat4<Rat>;

template <class K>
Mat4<K> mat_mul(const Mat4<K>& x, const Mat4<K>& y) {
  Mat4<K> r;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      K acc{};
      for (int k = 0; k < 4; ++k) acc += x[i][k] * y[k][j];
      r[i][j] = acc;
    }
  return r;
}

template <class K>
Mat4<K> mat_transpose(const Mat4<K>& x) {
  Mat4<K> r;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) r[i][j] = x[j][i];
  return r;
}

template <class K>
std::array<K, 4> mat_apply(const Mat4<K>& m, const std::array<K, 4>& v) {
  std::array<K, 4> r{};
  for (int i = 0; i < 4; ++i) {
    K acc{};
    for (int k = 0; k < 4; ++k) acc += m[i][k] * v[k];
    r[i] = acc;
  }
  return r;
}

// Laplace expansion along the first row; fine for 4x4 polynomial entries.
template <class K>
K mat_det(const Mat4<K>& m) {
  auto det3 = [&](int r0, int r1, int r2, int c0, int c1, int c2) {
    return m[r0][c0] * (m[r1][c1] * m[r2][c2] - m[r1][c2] * m[r2][c1]) -
           m[r0][c1] * (m[r1][c0] * m[r2][c2] - m[r1][c2] * m[r2][c0]) +
           m[r0][c2] * (m[r1][c0] * m[r2][c1] - m[r1][c1] * m[r2][c0]);
  };
  K acc{};
  int sign = 1;
  for (int c = 0; c < 4; ++c) {
    std::array<int, 3> cols;
    int k = 0;
    for (int j = 0; j < 4; ++j)
      if (j != c) cols[k++] = j;
    K term = m[0][c] * det3(1, 2, 3, cols[0], cols[1], cols[2]);
    acc = (sign > 0) ? acc + term : acc - term;
    sign = -sign;
  }
  return acc;
}

inline QMat mat_identity_q() {
  QMat r;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) r[i][j] = Rat(i == j ? 1 : 0);
  return r;
}

// Specialize polynomial entries at (A, B); entries must not use x,y,z,t,s.
QMat mat_specialize(const PMat& m, const Rat& a, const Rat& b);

// Evaluate a polynomial in A, B (optionally s = A/B handled by caller).
Rat eval_ab(const MPoly& p, const Rat& a, const Rat& b);

}  // namespace octic
