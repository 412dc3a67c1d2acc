#pragma once

// Plain modular-integer re-implementations of the defining identities, written without
// the library, used as independent oracles.

#include <array>
#include <cstdint>
#include <vector>

namespace naive {

using V2 = std::array<long, 2>;

inline long mod(long x, long p) { return ((x % p) + p) % p; }

// Two-dimensional algebra over F_p from 8 structure constants c[(i*2+j)*2+k].
struct Alg2 {
  std::array<long, 8> c{};
  long p = 2;
  V2 mul(const V2& x, const V2& y) const {
    V2 out{0, 0};
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j)
        for (int k = 0; k < 2; ++k) out[k] += x[i] * y[j] * c[(i * 2 + j) * 2 + k];
    return {mod(out[0], p), mod(out[1], p)};
  }
};

inline V2 e(int i) { return i == 0 ? V2{1, 0} : V2{0, 1}; }
inline V2 sub(V2 a, V2 b, long p) { return {mod(a[0] - b[0], p), mod(a[1] - b[1], p)}; }
inline V2 add(V2 a, V2 b, long p) { return {mod(a[0] + b[0], p), mod(a[1] + b[1], p)}; }
inline V2 scale(long s, V2 a, long p) { return {mod(s * a[0], p), mod(s * a[1], p)}; }

inline bool novikov(const Alg2& a) {
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      for (int k = 0; k < 2; ++k) {
        const V2 x = e(i), y = e(j), z = e(k);
        const V2 as1 = sub(a.mul(a.mul(x, y), z), a.mul(x, a.mul(y, z)), a.p);
        const V2 as2 = sub(a.mul(a.mul(y, x), z), a.mul(y, a.mul(x, z)), a.p);
        if (as1 != as2) return false;
        if (a.mul(a.mul(x, y), z) != a.mul(a.mul(x, z), y)) return false;
      }
  return true;
}

inline std::vector<Alg2> all_novikov(long p) {
  std::vector<Alg2> out;
  long total = 1;
  for (int i = 0; i < 8; ++i) total *= p;
  for (long idx = 0; idx < total; ++idx) {
    Alg2 a;
    a.p = p;
    long rest = idx;
    for (int i = 7; i >= 0; --i) {
      a.c[i] = rest % p;
      rest /= p;
    }
    if (novikov(a)) out.push_back(a);
  }
  return out;
}

// r[i][j] is the coefficient of e_i (x) e_j. Returns the 8 coefficients of
// r13 r23 + r12 * r23 + r13 r12 - eps (r + tau r)13 (r + tau r)23, with * the symmetrised product.
inline std::array<long, 8> nybe(const Alg2& a, const std::array<std::array<long, 2>, 2>& r, long eps = 0) {
  std::array<long, 8> t{};
  auto acc = [&](int i, int j, int k, long v) { t[(i * 2 + j) * 2 + k] += v; };
  std::array<std::array<long, 2>, 2> s{};
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) s[i][j] = r[i][j] + r[j][i];
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      for (int k = 0; k < 2; ++k)
        for (int l = 0; l < 2; ++l) {
          const long w = r[i][j] * r[k][l];
          const V2 yl = a.mul(e(j), e(l));
          const V2 st = add(a.mul(e(j), e(k)), a.mul(e(k), e(j)), a.p);
          const V2 xx = a.mul(e(i), e(k));
          for (int q = 0; q < 2; ++q) {
            acc(i, k, q, w * yl[q]);
            acc(i, q, l, w * st[q]);
            acc(q, l, j, w * xx[q]);
            acc(i, k, q, -eps * s[i][j] * s[k][l] * yl[q]);
          }
        }
  for (long& x : t) x = mod(x, a.p);
  return t;
}

// T(x)T(y) - T(T(x)y + xT(y) + lambda xy) - khat xy on basis pairs; t[row][col].
inline bool rota_baxter(const Alg2& a, const std::array<std::array<long, 2>, 2>& t, long lambda, long khat = 0) {
  auto ap = [&](V2 v) { return V2{mod(t[0][0] * v[0] + t[0][1] * v[1], a.p), mod(t[1][0] * v[0] + t[1][1] * v[1], a.p)}; };
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) {
      const V2 x = e(i), y = e(j);
      const V2 inner = add(add(a.mul(ap(x), y), a.mul(x, ap(y)), a.p), scale(lambda, a.mul(x, y), a.p), a.p);
      const V2 rhs = add(ap(inner), scale(khat, a.mul(x, y), a.p), a.p);
      if (a.mul(ap(x), ap(y)) != rhs) return false;
    }
  return true;
}

}  // namespace naive
