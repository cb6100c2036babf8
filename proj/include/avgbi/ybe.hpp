#pragma once

#include <optional>

#include "avgbi/bialgebra.hpp"

namespace avgbi {

// Delta(a) = (id (x) l(a) - r(a) (x) id)(r).
ComultTable coboundary_comultiplication(const Algebra& alg, const TwoTensor& r);

// YBE-1: the triple-product tensor vanishes; YBE-2: (alpha (x) id - id (x) beta)(r) = 0;
// YBE-3: (beta (x) id - id (x) alpha)(r) = 0.
CheckReport check_avg_ybe(const AveragingAlgebra& a, const LinOp& beta, const TwoTensor& r);

// COBA-1..8, expanded literally as displayed (no simplification).
CheckReport check_coboundary_conditions(const AveragingAlgebra& a, const LinOp& beta,
                                        const TwoTensor& r);

// Matrices of r#: xi -> sum <xi, x_i> y_i and of rnat: <xi, rnat(eta)> = -<xi(x)eta, r>.
Matrix r_sharp_matrix(const TwoTensor& r);
Matrix r_natural_matrix(const TwoTensor& r);

// OOP-1/OOP-2 when no weight is given; with a weight the bimodule must be the
// regular one and the report carries RB-<w>-1 / RB-<w>-2.
CheckReport verify_o_operator(const OOperatorData& data,
                              const std::optional<Rat>& weight = std::nullopt);

CheckReport check_rota_baxter(const AveragingAlgebra& a, const LinOp& R, const Rat& weight);
// Adds the form-compatibility identity RB-<w>-3.
CheckReport check_rb_on_frobenius(const AveragingAlgebra& a, const BilinearForm& form,
                                  const LinOp& R, const Rat& weight);

// Builds A + M* (semidirect by the dual bimodule), embeds P as sum P(e_i) (x) e_i*
// and returns r = P - tau(P) with the (beta + gamma2*)-YBE report plus the
// operator conditions OPEQ-1 (alpha P = P gamma2), OPEQ-2 (beta P = P gamma1)
// and the plain O-operator law on the base bimodule.
struct SemidirectYbe {
  AveragingAlgebra semi;
  TwoTensor r;
  CheckReport report;
};
SemidirectYbe ybe_from_o_operator(const AveragingAlgebra& a, const AveragingBimodule& bimod,
                                  const Matrix& P, const LinOp& beta, const Matrix& gamma2,
                                  bool force = false);

// m1 > m2 = l(P(m1))(m2), m1 < m2 = r(P(m2))(m1) with the module operator.
DendriformData dendriform_from_o_operator(const OOperatorData& data, bool force = false);

// Canonical antisymmetric r = sum (e_i (x) e_i* - e_i* (x) e_i) on A + A*.
SemidirectYbe canonical_ybe_from_dendriform(const DendriformData& d, bool force = false);

// PYBE-1: r12 r23 - r13 r23 + r12 r13 - r13 r12 = 0 in the perm algebra.
CheckReport check_perm_ybe(const PermAlgebra& p, const TwoTensor& r);

// CYBE-1: [r12, r13] + [r12, r23] + [r13, r23] = 0.
CheckReport check_cybe(const LieAlgebra& l, const TwoTensor& r);

// r~ = sum (x_i (x) e_j) (x) (y_i (x) f_j) with f_j the omega-dual basis,
// on the tensor_lie basis ordering.
TwoTensor lift_r_to_lie(const PermAlgebra& p, const PreLieQuadratic& q, const TwoTensor& r);

// Product xi .r eta = r*_A(r#(xi))(eta) + l*_A(rnat(eta))(xi) on A*.
Cubic dual_r_product(const Algebra& a, const TwoTensor& r);

}  // namespace avgbi
