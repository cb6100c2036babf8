#pragma once

#include <optional>
#include <stdexcept>
#include <vector>

#include "avgbi/rational.hpp"

namespace avgbi {

struct shape_error : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Dense rational matrix. Also used for the coefficient grid of an element
// of A (x) A (r = sum coeff[i][j] e_i (x) e_j) and for operators in a fixed
// basis (column i = image of the i-th basis vector).
class Matrix {
 public:
  Matrix() = default;
  Matrix(int rows, int cols);

  static Matrix identity(int n);

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  Rat& at(int i, int j) { return a_[static_cast<size_t>(i) * cols_ + j]; }
  const Rat& at(int i, int j) const { return a_[static_cast<size_t>(i) * cols_ + j]; }

  bool operator==(const Matrix& o) const = default;

  Matrix operator+(const Matrix& o) const;
  Matrix operator-(const Matrix& o) const;
  Matrix operator-() const;
  Matrix operator*(const Matrix& o) const;
  Matrix operator*(const Rat& c) const;

  Matrix transpose() const;
  bool is_zero() const;
  bool is_square() const { return rows_ == cols_; }

  Vec apply(const Vec& x) const;
  Vec column(int j) const;

  // Exact inverse; nullopt when the matrix is singular. Throws on non-square.
  std::optional<Matrix> inverse() const;
  int rank() const;
  // A nonzero kernel vector when one exists.
  std::optional<Vec> kernel_vector() const;

  // Row-major flattening, used in check witnesses.
  Vec flat() const { return a_; }

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<Rat> a_;
};

// An element of A (x) A by its coefficient grid, and an operator matrix.
using TwoTensor = Matrix;
using LinOp = Matrix;

// Operator applied to the left / right tensor leg of t in A (x) A.
inline Matrix op_left(const Matrix& f, const Matrix& t) { return f * t; }
inline Matrix op_right(const Matrix& g, const Matrix& t) { return t * g.transpose(); }

Matrix diag_sum(const Matrix& a, const Matrix& b);

}  // namespace avgbi
