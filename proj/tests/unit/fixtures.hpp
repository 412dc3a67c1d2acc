#pragma once

#include "nova/algebra.hpp"

namespace fx {

// e1 e1 = e1, e1 e2 = e2 e1 = e2, e2 e2 = 0.
inline nova::Algebra a2(nova::Field f) {
  nova::Algebra a(f, 2);
  a.set_mul(0, 0, nova::Vec::of(f, {1, 0}));
  a.set_mul(0, 1, nova::Vec::of(f, {0, 1}));
  a.set_mul(1, 0, nova::Vec::of(f, {0, 1}));
  return a;
}
// T(e1) = -2e1 + 4e2, T(e2) = e2
inline nova::Matrix t2(nova::Field f) { return nova::Matrix::of(f, 2, 2, {-2, 0, 4, 1}); }
// beta(e1) = e1 + 3e2, beta(e2) = e2
inline nova::Matrix beta2(nova::Field f) { return nova::Matrix::of(f, 2, 2, {1, 0, 3, 1}); }

inline nova::Field q() { return nova::Field::rational(); }

}  // namespace fx
