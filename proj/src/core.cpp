#include "avgbi/core.hpp"

namespace avgbi {

std::optional<Matrix> mat_inverse(const Matrix& m) { return m.inverse(); }

TwoTensor tensor_flip(const TwoTensor& r) { return r.transpose(); }

std::pair<TwoTensor, TwoTensor> sym_split(const TwoTensor& r) {
  TwoTensor t = tensor_flip(r);
  return {(r + t) * half(), (r - t) * half()};
}

ThreeTensor ybe_triple(const StructureConstants& mul, const TwoTensor& r) {
  int n = mul.dim();
  if (r.rows() != n || r.cols() != n) throw shape_error("ybe_triple: dim mismatch");
  ThreeTensor out(n);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      const Rat& rab = r.at(a, b);
      if (rab == 0) continue;
      for (int c = 0; c < n; ++c) {
        for (int d = 0; d < n; ++d) {
          const Rat& rcd = r.at(c, d);
          if (rcd == 0) continue;
          Rat w = rab * rcd;
          // r12 r13: x_a x_c (x) y_b (x) y_d
          for (int p = 0; p < n; ++p)
            if (mul.at(a, c, p) != 0) out.at(p, b, d) += w * mul.at(a, c, p);
          // r13 r23: x_a (x) x_c (x) y_b y_d
          for (int s = 0; s < n; ++s)
            if (mul.at(b, d, s) != 0) out.at(a, c, s) += w * mul.at(b, d, s);
          // r23 r12 (subtracted): x_c (x) x_a y_d (x) y_b, indices (a,b) from
          // r23 and (c,d) from r12.
          for (int q = 0; q < n; ++q)
            if (mul.at(a, d, q) != 0) out.at(c, q, b) -= w * mul.at(a, d, q);
        }
      }
    }
  }
  return out;
}

}  // namespace avgbi
