#pragma once

#include <optional>

#include "avgbi/actions.hpp"

namespace avgbi {

// Quadruple (A, mul, comul, alpha, beta): averaging algebra + averaging
// coalgebra coupled by the ASI conditions and two cross bimodule conditions.
struct AsiBialgebraData {
  int dim = 0;
  StructureConstants mul;
  ComultTable comul;
  LinOp alpha;
  LinOp beta;
};

struct BilinearForm {
  Matrix B;  // B[i][j] = form(e_i, e_j)

  // Musical map phi: A -> A*, phi(a)(b) = form(a, b).
  Matrix phi() const { return B.transpose(); }
};

// Two algebras acting on each other so that the direct sum carries a product.
// Actions are stored per base basis vector (lA[i] acts on B, lB[j] on A).
struct MatchedPairData {
  AveragingAlgebra algA;
  AveragingAlgebra algB;
  std::vector<Matrix> lA, rA;  // A acting on B
  std::vector<Matrix> lB, rB;  // B acting on A
  bool b_is_dual_of_a = false;
};

struct PermBialgebraData {
  int dim = 0;
  StructureConstants mul;   // perm product
  ComultTable comul;        // perm coproduct
};

struct PermMatchedPair {
  PermAlgebra algA;
  PermAlgebra algB;
  std::vector<Matrix> lA, rA, lB, rB;
};

// --- coalgebra / bialgebra suites ------------------------------------------

CheckReport check_coassoc(const ComultTable& d);                   // COASSOC-1
CheckReport check_cocomm(const ComultTable& d);                    // COASSOC-1, COCOMM-1
CheckReport check_averaging_coalgebra(const ComultTable& d, const LinOp& beta);
CheckReport check_asi(const Algebra& a, const ComultTable& d);     // + ASI-1, ASI-2
CheckReport check_averaging_asi(const AsiBialgebraData& b);
CheckReport check_frobenius_form(const Algebra& a, const BilinearForm& form);
CheckReport check_matched_pair_averaging(const MatchedPairData& mp);  // MP-1, MP-AVG
// Double of an averaging algebra on 2*split dims with the canonical pairing
// form; DBL-1 is the invariance of that form under the double's product.
CheckReport check_double_construction(const AveragingAlgebra& dbl, int split,
                                      const std::optional<BilinearForm>& form = std::nullopt);
CheckReport check_perm_bialgebra(const PermBialgebraData& pb);
CheckReport check_perm_manin(const PermAlgebra& big, int split, const Matrix& form);

// --- constructions ----------------------------------------------------------

// Unique adjoint of alpha under a nondegenerate form: B^-1 alpha^T B.
LinOp adjoint_operator(const LinOp& alpha, const BilinearForm& form);

// Dual algebra on A* with the four transpose actions.
MatchedPairData matched_pair_from_bialgebra(const AsiBialgebraData& b, bool force = false);

struct BowtieResult {
  AveragingAlgebra alg;                // A block first, B block second
  std::optional<BilinearForm> form_d;  // canonical pairing form when B = A*
};
BowtieResult bowtie(const MatchedPairData& mp, bool force = false);

struct DoubleBialgebra {
  AsiBialgebraData dbl;
  TwoTensor r_can;  // sum e_i (x) e_i*
};
DoubleBialgebra double_bialgebra(const AsiBialgebraData& b, bool force = false);

// (A*, dual product, negated dual comultiplication, beta*, alpha*).
AsiBialgebraData dualize_bialgebra(const AsiBialgebraData& b, bool force = false);

// Gate report always carries COMPA-1, COMPA-2 and INDBI-1..3; the induced
// perm bialgebra (mul = alpha(x) y, comul = (beta (x) id) Delta) is built
// only when both COMPA identities hold.
struct PermInductionResult {
  CheckReport gate;
  std::optional<PermBialgebraData> bialgebra;
  std::optional<CheckReport> report;  // perm-bialgebra suite on the output
};
PermInductionResult induce_perm_bialgebra(const AsiBialgebraData& b, bool force = false);

struct PermManinTriple {
  PermAlgebra big;   // P block first, P* block second
  Matrix form;       // antisymmetric canonical pairing
  CheckReport report;
};
PermManinTriple perm_manin_triple(const PermBialgebraData& pb, bool force = false);

// Induced matched pair of perm algebras from a matched pair of commutative
// averaging algebras (module actions: lA == rA and lB == rB expected).
PermMatchedPair induce_perm_matched_pair(const MatchedPairData& mp, bool force = false);
PermAlgebra perm_bowtie(const PermMatchedPair& pmp);

// Dual product table on A*: (e_i* . e_j*)_k = comul(k, i, j).
Cubic dual_product(const ComultTable& comul);
// Dual comultiplication table of a product: row i is the grid of mul(_,_,i).
Cubic dual_comultiplication(const StructureConstants& mul);

// Canonical pairing forms on A + A*.
BilinearForm pairing_form_symmetric(int n);
Matrix pairing_form_antisymmetric(int n);

}  // namespace avgbi
