#include "avgbi/cubic.hpp"

#include <algorithm>

namespace avgbi {

Cubic::Cubic(int dim)
    : dim_(dim), a_(static_cast<size_t>(dim) * dim * dim) {
  if (dim < 0) throw shape_error("negative tensor dimension");
}

Cubic Cubic::operator+(const Cubic& o) const {
  if (dim_ != o.dim_) throw shape_error("cubic add: dim mismatch");
  Cubic out(*this);
  for (size_t i = 0; i < a_.size(); ++i) out.a_[i] += o.a_[i];
  return out;
}

Cubic Cubic::operator-(const Cubic& o) const {
  if (dim_ != o.dim_) throw shape_error("cubic sub: dim mismatch");
  Cubic out(*this);
  for (size_t i = 0; i < a_.size(); ++i) out.a_[i] -= o.a_[i];
  return out;
}

Cubic Cubic::operator-() const {
  Cubic out(*this);
  for (auto& x : out.a_) x = -x;
  return out;
}

Cubic Cubic::operator*(const Rat& c) const {
  Cubic out(*this);
  for (auto& x : out.a_) x *= c;
  return out;
}

bool Cubic::is_zero() const {
  return std::all_of(a_.begin(), a_.end(), [](const Rat& x) { return x == 0; });
}

std::optional<std::array<int, 3>> Cubic::first_nonzero() const {
  for (int i = 0; i < dim_; ++i)
    for (int j = 0; j < dim_; ++j)
      for (int k = 0; k < dim_; ++k)
        if (at(i, j, k) != 0) return std::array<int, 3>{i, j, k};
  return std::nullopt;
}

Vec Cubic::mul(const Vec& x, const Vec& y) const {
  Vec out(static_cast<size_t>(dim_));
  for (int i = 0; i < dim_; ++i) {
    if (x[i] == 0) continue;
    for (int j = 0; j < dim_; ++j) {
      if (y[j] == 0) continue;
      Rat c = x[i] * y[j];
      for (int k = 0; k < dim_; ++k)
        if (at(i, j, k) != 0) out[k] += c * at(i, j, k);
    }
  }
  return out;
}

Matrix Cubic::left_mat(int i) const {
  Matrix m(dim_, dim_);
  for (int j = 0; j < dim_; ++j)
    for (int k = 0; k < dim_; ++k) m.at(k, j) = at(i, j, k);
  return m;
}

Matrix Cubic::right_mat(int i) const {
  Matrix m(dim_, dim_);
  for (int j = 0; j < dim_; ++j)
    for (int k = 0; k < dim_; ++k) m.at(k, j) = at(j, i, k);
  return m;
}

Matrix Cubic::left_mat(const Vec& x) const {
  Matrix m(dim_, dim_);
  for (int i = 0; i < dim_; ++i) {
    if (x[i] == 0) continue;
    for (int j = 0; j < dim_; ++j)
      for (int k = 0; k < dim_; ++k)
        if (at(i, j, k) != 0) m.at(k, j) += x[i] * at(i, j, k);
  }
  return m;
}

Matrix Cubic::right_mat(const Vec& x) const {
  Matrix m(dim_, dim_);
  for (int i = 0; i < dim_; ++i) {
    if (x[i] == 0) continue;
    for (int j = 0; j < dim_; ++j)
      for (int k = 0; k < dim_; ++k)
        if (at(j, i, k) != 0) m.at(k, j) += x[i] * at(j, i, k);
  }
  return m;
}

Matrix Cubic::slice(int i) const {
  Matrix m(dim_, dim_);
  for (int j = 0; j < dim_; ++j)
    for (int k = 0; k < dim_; ++k) m.at(j, k) = at(i, j, k);
  return m;
}

Matrix comul_apply(const Cubic& d, const Vec& x) {
  Matrix out(d.dim(), d.dim());
  for (int i = 0; i < d.dim(); ++i) {
    if (x[i] == 0) continue;
    for (int j = 0; j < d.dim(); ++j)
      for (int k = 0; k < d.dim(); ++k)
        if (d.at(i, j, k) != 0) out.at(j, k) += x[i] * d.at(i, j, k);
  }
  return out;
}

Cubic flip12(const Cubic& c) {
  Cubic out(c.dim());
  for (int i = 0; i < c.dim(); ++i)
    for (int j = 0; j < c.dim(); ++j)
      for (int k = 0; k < c.dim(); ++k) out.at(i, j, k) = c.at(j, i, k);
  return out;
}

}  // namespace avgbi
