#pragma once

#include <optional>
#include <utility>

#include "avgbi/core.hpp"
#include "avgbi/report.hpp"

namespace avgbi {

struct Algebra {
  int dim = 0;
  StructureConstants mul;
};

struct AveragingAlgebra {
  Algebra alg;
  LinOp alpha;

  int dim() const { return alg.dim; }
};

struct PermAlgebra {
  int dim = 0;
  StructureConstants mul;
};

struct DendriformData {
  int dim = 0;
  StructureConstants succ;
  StructureConstants prec;
  std::optional<LinOp> alpha;
};

struct PreLieQuadratic {
  int dim = 0;
  StructureConstants circ;
  Matrix omega;
};

struct LieAlgebra {
  int dim = 0;
  StructureConstants bracket;
};

// Axiom suites. Every identity is evaluated on all basis tuples; the first
// failure is recorded with a witness.
CheckReport check_associative(const Algebra& a);            // ASSOC-1
CheckReport check_commutative(const Algebra& a);            // ASSOC-1, COMM-1
CheckReport check_averaging_algebra(const AveragingAlgebra& a);  // ASSOC-1, AVG-1a/1b
CheckReport check_perm(const PermAlgebra& p);               // PERM-1, PERM-2
CheckReport check_dendriform(const DendriformData& d);      // DEND-1..3
CheckReport check_averaging_dendriform(const DendriformData& d);  // + AVGDEND-1..4
CheckReport check_pre_lie(const StructureConstants& circ);  // PRELIE-1
CheckReport check_quadratic_pre_lie(const PreLieQuadratic& q);  // + OMEGA-1..3
CheckReport check_lie(const LieAlgebra& l);                 // LIE-1, LIE-2

// Derived products a * b = alpha(a) b and a * b = a alpha(b); both carry the
// original operator. Input must pass the averaging suite unless forced.
std::pair<AveragingAlgebra, AveragingAlgebra> derived_products(
    const AveragingAlgebra& a, bool force = false);

// Perm product alpha(x) y of a commutative averaging algebra.
PermAlgebra induce_perm(const AveragingAlgebra& a, bool force = false);

// mul = succ + prec with the dendriform operator.
AveragingAlgebra associated_averaging_algebra(const DendriformData& d, bool force = false);

// succ = R(x) y, prec = x R(y) for a weight-0 Rota-Baxter R with R alpha = alpha R.
DendriformData dendriform_from_rota_baxter(const AveragingAlgebra& a, const LinOp& R,
                                           bool force = false);

// Bracket [p (x) q, p' (x) q'] = (p p') (x) (q q') - (p' p) (x) (q' q) on the
// tensor product, basis ordered row-major in (perm index, pre-Lie index).
LieAlgebra tensor_lie(const PermAlgebra& p, const PreLieQuadratic& q, bool force = false);

}  // namespace avgbi
