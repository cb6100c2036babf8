#pragma once

#include <vector>

#include "avgbi/structures.hpp"

namespace avgbi {

// Bimodule data over an averaging algebra. One action matrix per base basis
// vector, so composition identities are plain matrix products.
struct AveragingBimodule {
  AveragingAlgebra base;
  int mdim = 0;
  std::vector<Matrix> lact;  // lact[i] = matrix of l(e_i)
  std::vector<Matrix> ract;  // ract[i] = matrix of r(e_i)
  Matrix beta;               // operator on M
};

struct PermBimodule {
  PermAlgebra base;
  int mdim = 0;
  std::vector<Matrix> lact;
  std::vector<Matrix> ract;
};

struct OOperatorData {
  AveragingBimodule bimod;
  Matrix P;  // n x m, as a map M -> A
};

// Action of a general base element x: sum_i x_i act[i].
Matrix act_of(const std::vector<Matrix>& act, const Vec& x);

CheckReport check_assoc_bimodule(const Algebra& base, int mdim,
                                 const std::vector<Matrix>& lact,
                                 const std::vector<Matrix>& ract);  // BIM-1..3
CheckReport check_averaging_bimodule(const AveragingBimodule& m);   // + ADM-1a/1b/2a/2b
CheckReport check_perm_bimodule(const PermBimodule& m);             // PBIM-1..4

// Regular bimodule (A, l, r, beta) of an averaging algebra; beta defaults to
// the averaging operator itself.
AveragingBimodule regular_bimodule(const AveragingAlgebra& a);
AveragingBimodule regular_bimodule(const AveragingAlgebra& a, const Matrix& beta);
PermBimodule perm_regular_bimodule(const PermAlgebra& p);

// Semidirect product on A + M (base block first), operator alpha + beta.
AveragingAlgebra semidirect_product(const AveragingAlgebra& a, const AveragingBimodule& m,
                                    bool force = false);

// (M*, r*, l*, beta*).
AveragingBimodule dual_averaging_bimodule(const AveragingBimodule& m);

PermAlgebra perm_semidirect(const PermAlgebra& p, const PermBimodule& m, bool force = false);

// (M*, l*, l* - r*).
PermBimodule perm_dual_bimodule(const PermBimodule& m, bool force = false);

// From a module (M, mu, beta) over a commutative averaging algebra:
// l(a) = mu(alpha(a)), r(a) = mu(a) beta, over the induced perm algebra.
PermBimodule induce_perm_bimodule(const AveragingAlgebra& a, const std::vector<Matrix>& mu,
                                  const Matrix& beta, bool force = false);

// beta(mu(a)m) = mu(alpha(a))m - mu(a)beta(m) on all basis pairs; decides
// whether the dual of the induced bimodule is itself induced.
CheckReport check_dual_compat(const AveragingAlgebra& a, const std::vector<Matrix>& mu,
                              const Matrix& beta);  // DUALCOMPAT

}  // namespace avgbi
