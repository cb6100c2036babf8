#pragma once

#include <optional>
#include <utility>

#include "avgbi/cubic.hpp"
#include "avgbi/matrix.hpp"

namespace avgbi {

// nullopt when m has no inverse; throws shape_error on non-square input.
std::optional<Matrix> mat_inverse(const Matrix& m);

// Flip tau(a (x) b) = b (x) a; on the coefficient grid this is the transpose.
TwoTensor tensor_flip(const TwoTensor& r);

// r = s + a with tau(s) = s and tau(a) = -a.
std::pair<TwoTensor, TwoTensor> sym_split(const TwoTensor& r);

// r12 r13 + r13 r23 - r23 r12 for the given associative product, where
//   r12 r13 = sum x_i x_j (x) y_i (x) y_j
//   r13 r23 = sum x_i (x) x_j (x) y_i y_j
//   r23 r12 = sum x_j (x) x_i y_j (x) y_i.
ThreeTensor ybe_triple(const StructureConstants& mul, const TwoTensor& r);

}  // namespace avgbi
