#pragma once

#include <variant>

#include "avgbi/ybe.hpp"

namespace avgbi {

// LRINV-1: the coboundary comultiplication of t vanishes.
CheckReport check_lr_invariant(const Algebra& alg, const TwoTensor& t);

struct NotSolution {
  CheckReport report;
};
// FACT-1/FACT-2 are reported informationally even when only quasi-triangular.
struct QuasiTriangular {
  CheckReport report;
};
struct FactorizableData {
  CheckReport report;
  TwoTensor r;
  Matrix I;     // r# - rnat
  Matrix Iinv;  // cached inverse
};
using Classification = std::variant<NotSolution, QuasiTriangular, FactorizableData>;

// Quasi-triangular: YBE passes and the symmetric part of r is invariant.
// Factorizable: additionally FACT-1 (I invertible) and FACT-2 (I beta* = alpha I).
Classification classify_r(const AveragingAlgebra& a, const LinOp& beta, const TwoTensor& r);

const CheckReport& classification_report(const Classification& c);

// a = a+ + a- with a+ = r#(I^-1 a), a- = -rnat(I^-1 a).
std::pair<Vec, Vec> factorize_element(const FactorizableData& fact, const Vec& a);

struct RbFromFactorizable {
  BilinearForm form;  // B_I(a, b) = <I^-1(a), b>
  LinOp R;            // lambda rnat I^-1
};
RbFromFactorizable rb_from_factorizable(const FactorizableData& fact, const Rat& lambda);

// r# := (1/lambda)(R + lambda id) I_B, recovered from a symmetric averaging
// Frobenius algebra with a weight-lambda Rota-Baxter operator.
TwoTensor factorizable_from_rb(const AveragingAlgebra& a, const BilinearForm& form,
                               const LinOp& R, const Rat& lambda, bool force = false);

// Twisted structure: product a .R b = R(a)b + aR(b) + lambda ab, coproduct
// dual to (xi, eta) -> (1/lambda) I^-1(I(xi) I(eta)), and the isomorphism
// witness (1/lambda) I with its intertwining report.
struct TwistedBialgebra {
  StructureConstants mulR;
  ComultTable comulI;
  LinOp iso;
  CheckReport intertwining;  // TWIST-PROD, TWIST-COMUL, TWIST-OP
};
TwistedBialgebra twisted_bialgebra(const AveragingAlgebra& a, const LinOp& beta,
                                   const FactorizableData& fact, const Rat& lambda);

}  // namespace avgbi
