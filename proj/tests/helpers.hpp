#pragma once

#include <initializer_list>
#include <random>
#include <vector>

#include "avgbi/document.hpp"

namespace avgbi::test {

struct Entry3 {
  int i, j, k;
  int c;
};
struct Entry2 {
  int i, j;
  int c;
};

inline Cubic cubic(int n, std::initializer_list<Entry3> entries) {
  Cubic c(n);
  for (const auto& e : entries) c.at(e.i, e.j, e.k) = e.c;
  return c;
}

inline Matrix grid(int n, std::initializer_list<Entry2> entries) {
  Matrix m(n, n);
  for (const auto& e : entries) m.at(e.i, e.j) = e.c;
  return m;
}

// Operator by images: op(n, {{in, out, c}, ...}) sets column `in`.
inline Matrix op(int n, std::initializer_list<Entry2> entries) {
  Matrix m(n, n);
  for (const auto& e : entries) m.at(e.j, e.i) = e.c;
  return m;
}

// The averaging algebra of the three-dimensional antisymmetric-YBE fixture:
// e1 e1 = e1, e1 e2 = e2 = e2 e1, alpha(e1) = alpha(e2) = e3.
inline AveragingAlgebra fixture_a3() {
  return AveragingAlgebra{{3, cubic(3, {{0, 0, 0, 1}, {0, 1, 1, 1}, {1, 0, 1, 1}})},
                          op(3, {{0, 2, 1}, {1, 2, 1}})};
}

inline Matrix fixture_a3_beta() { return op(3, {{0, 2, 1}, {1, 2, -1}}); }

// Same product with alpha(e1) = e3 only; beta = 0.
inline AveragingAlgebra fixture_c3() {
  return AveragingAlgebra{{3, cubic(3, {{0, 0, 0, 1}, {0, 1, 1, 1}, {1, 0, 1, 1}})},
                          op(3, {{0, 2, 1}})};
}

inline TwoTensor r_antisym3() { return grid(3, {{1, 2, 1}, {2, 1, -1}}); }
inline TwoTensor r_sym3() { return grid(3, {{2, 2, 1}}); }

// Example fixture pair for the perm / pre-Lie tensor constructions.
inline PermAlgebra perm_printed3() {
  return PermAlgebra{3, cubic(3, {{0, 0, 2, 1}, {1, 0, 2, 1}})};
}

inline PreLieQuadratic prelie2() {
  return PreLieQuadratic{2, cubic(2, {{0, 1, 0, 1}, {1, 1, 1, 1}}),
                         grid(2, {{0, 1, 1}, {1, 0, -1}})};
}

inline Rat rat(long long p, long long q = 1) { return Rat(p, q); }

}  // namespace avgbi::test
