#include "avgbi/matrix.hpp"

#include <algorithm>

namespace avgbi {

Matrix::Matrix(int rows, int cols)
    : rows_(rows), cols_(cols), a_(static_cast<size_t>(rows) * cols) {
  if (rows < 0 || cols < 0) throw shape_error("negative matrix dimension");
}

Matrix Matrix::identity(int n) {
  Matrix m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

Matrix Matrix::operator+(const Matrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw shape_error("matrix add: shape mismatch");
  Matrix out(*this);
  for (size_t i = 0; i < a_.size(); ++i) out.a_[i] += o.a_[i];
  return out;
}

Matrix Matrix::operator-(const Matrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw shape_error("matrix sub: shape mismatch");
  Matrix out(*this);
  for (size_t i = 0; i < a_.size(); ++i) out.a_[i] -= o.a_[i];
  return out;
}

Matrix Matrix::operator-() const {
  Matrix out(*this);
  for (auto& x : out.a_) x = -x;
  return out;
}

Matrix Matrix::operator*(const Matrix& o) const {
  if (cols_ != o.rows_) throw shape_error("matrix mul: shape mismatch");
  Matrix out(rows_, o.cols_);
  for (int i = 0; i < rows_; ++i) {
    for (int k = 0; k < cols_; ++k) {
      const Rat& x = at(i, k);
      if (x == 0) continue;
      for (int j = 0; j < o.cols_; ++j) {
        if (o.at(k, j) == 0) continue;
        out.at(i, j) += x * o.at(k, j);
      }
    }
  }
  return out;
}

Matrix Matrix::operator*(const Rat& c) const {
  Matrix out(*this);
  for (auto& x : out.a_) x *= c;
  return out;
}

Matrix Matrix::transpose() const {
  Matrix out(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) out.at(j, i) = at(i, j);
  return out;
}

bool Matrix::is_zero() const {
  return std::all_of(a_.begin(), a_.end(), [](const Rat& x) { return x == 0; });
}

Vec Matrix::apply(const Vec& x) const {
  if (static_cast<int>(x.size()) != cols_) throw shape_error("matrix apply: shape mismatch");
  Vec out(static_cast<size_t>(rows_));
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j)
      if (at(i, j) != 0 && x[j] != 0) out[i] += at(i, j) * x[j];
  return out;
}

Vec Matrix::column(int j) const {
  Vec out(static_cast<size_t>(rows_));
  for (int i = 0; i < rows_; ++i) out[i] = at(i, j);
  return out;
}

namespace {

// Gauss-Jordan on [m | rhs]; returns reduced m in place and rank.
int rref(Matrix& m, Matrix* rhs) {
  int rank = 0;
  for (int col = 0; col < m.cols() && rank < m.rows(); ++col) {
    int pivot = -1;
    for (int i = rank; i < m.rows(); ++i) {
      if (m.at(i, col) != 0) {
        pivot = i;
        break;
      }
    }
    if (pivot < 0) continue;
    for (int j = 0; j < m.cols(); ++j) std::swap(m.at(pivot, j), m.at(rank, j));
    if (rhs)
      for (int j = 0; j < rhs->cols(); ++j) std::swap(rhs->at(pivot, j), rhs->at(rank, j));
    Rat inv = Rat(1) / m.at(rank, col);
    for (int j = 0; j < m.cols(); ++j) m.at(rank, j) *= inv;
    if (rhs)
      for (int j = 0; j < rhs->cols(); ++j) rhs->at(rank, j) *= inv;
    for (int i = 0; i < m.rows(); ++i) {
      if (i == rank || m.at(i, col) == 0) continue;
      Rat f = m.at(i, col);
      for (int j = 0; j < m.cols(); ++j) m.at(i, j) -= f * m.at(rank, j);
      if (rhs)
        for (int j = 0; j < rhs->cols(); ++j) rhs->at(i, j) -= f * rhs->at(rank, j);
    }
    ++rank;
  }
  return rank;
}

}  // namespace

std::optional<Matrix> Matrix::inverse() const {
  if (!is_square()) throw shape_error("inverse of non-square matrix");
  Matrix m(*this);
  Matrix rhs = identity(rows_);
  if (rref(m, &rhs) < rows_) return std::nullopt;
  return rhs;
}

int Matrix::rank() const {
  Matrix m(*this);
  return rref(m, nullptr);
}

std::optional<Vec> Matrix::kernel_vector() const {
  Matrix m(*this);
  rref(m, nullptr);
  // Identify pivot columns of the reduced matrix.
  std::vector<int> pivot_of_col(cols_, -1);
  int row = 0;
  for (int col = 0; col < cols_ && row < rows_; ++col) {
    if (m.at(row, col) != 0) pivot_of_col[col] = row++;
  }
  int free_col = -1;
  for (int col = 0; col < cols_; ++col) {
    if (pivot_of_col[col] < 0) {
      free_col = col;
      break;
    }
  }
  if (free_col < 0) return std::nullopt;
  Vec v = zero_vec(cols_);
  v[free_col] = 1;
  for (int col = 0; col < cols_; ++col) {
    if (pivot_of_col[col] >= 0) v[col] = -m.at(pivot_of_col[col], free_col);
  }
  return v;
}

Matrix diag_sum(const Matrix& a, const Matrix& b) {
  Matrix out(a.rows() + b.rows(), a.cols() + b.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) out.at(i, j) = a.at(i, j);
  for (int i = 0; i < b.rows(); ++i)
    for (int j = 0; j < b.cols(); ++j) out.at(a.rows() + i, a.cols() + j) = b.at(i, j);
  return out;
}

}  // namespace avgbi
