#pragma once

#include <array>
#include <optional>
#include <vector>

#include "avgbi/matrix.hpp"
#include "avgbi/rational.hpp"

namespace avgbi {

// Cubical rational array over one basis. Serves both as a structure-constant
// table (e_i e_j = sum_k at(i,j,k) e_k, likewise comultiplications with
// Delta(e_i) = sum_{j,k} at(i,j,k) e_j (x) e_k) and as an element of the
// triple tensor power.
class Cubic {
 public:
  Cubic() = default;
  explicit Cubic(int dim);

  int dim() const { return dim_; }

  Rat& at(int i, int j, int k) {
    return a_[(static_cast<size_t>(i) * dim_ + j) * dim_ + k];
  }
  const Rat& at(int i, int j, int k) const {
    return a_[(static_cast<size_t>(i) * dim_ + j) * dim_ + k];
  }

  bool operator==(const Cubic& o) const = default;
  Cubic operator+(const Cubic& o) const;
  Cubic operator-(const Cubic& o) const;
  Cubic operator-() const;
  Cubic operator*(const Rat& c) const;

  bool is_zero() const;
  std::optional<std::array<int, 3>> first_nonzero() const;

  // Product of coordinate vectors under this table.
  Vec mul(const Vec& x, const Vec& y) const;

  // Matrix of left/right multiplication by e_i: L[k][j] = at(i,j,k),
  // R[k][j] = at(j,i,k).
  Matrix left_mat(int i) const;
  Matrix right_mat(int i) const;

  // Left/right multiplication by an arbitrary element.
  Matrix left_mat(const Vec& x) const;
  Matrix right_mat(const Vec& x) const;

  // Slice Delta(e_i) as a two-tensor grid: out[j][k] = at(i,j,k).
  Matrix slice(int i) const;

  Vec flat() const { return a_; }

 private:
  int dim_ = 0;
  std::vector<Rat> a_;
};

using StructureConstants = Cubic;
using ThreeTensor = Cubic;
using ComultTable = Cubic;

// Comultiplication table applied to a coordinate vector.
Matrix comul_apply(const Cubic& d, const Vec& x);

// Table of the opposite product (and of the flipped comultiplication).
Cubic flip12(const Cubic& c);

}  // namespace avgbi
