#include "avgbi/structures.hpp"

namespace avgbi {

namespace {

AxiomResult assoc_axiom(std::string id, const Cubic& mul) {
  int n = mul.dim();
  return check_tuples(std::move(id), n, 3, [&](const std::vector<int>& t) {
    Vec ij = mul.left_mat(t[0]).column(t[1]);
    Vec jk = mul.left_mat(t[1]).column(t[2]);
    return std::pair(mul.mul(ij, basis_vec(n, t[2])), mul.mul(basis_vec(n, t[0]), jk));
  });
}

// alpha(a) alpha(b) against the two absorbed forms.
void add_averaging_axioms(CheckReport& rep, const Cubic& mul, const Matrix& alpha,
                          const std::string& id_a, const std::string& id_b) {
  int n = mul.dim();
  auto lhs_at = [&](int i, int j) { return mul.mul(alpha.column(i), alpha.column(j)); };
  rep.add(check_tuples(id_a, n, 2, [&](const std::vector<int>& t) {
    Vec rhs = alpha.apply(mul.mul(alpha.column(t[0]), basis_vec(n, t[1])));
    return std::pair(lhs_at(t[0], t[1]), rhs);
  }));
  rep.add(check_tuples(id_b, n, 2, [&](const std::vector<int>& t) {
    Vec rhs = alpha.apply(mul.mul(basis_vec(n, t[0]), alpha.column(t[1])));
    return std::pair(lhs_at(t[0], t[1]), rhs);
  }));
}

void require(const CheckReport& rep, bool force, const char* what) {
  if (!force && !rep.ok()) throw validation_error(what, rep);
}

}  // namespace

CheckReport check_associative(const Algebra& a) {
  CheckReport rep("associative");
  rep.add(assoc_axiom("ASSOC-1", a.mul));
  return rep;
}

CheckReport check_commutative(const Algebra& a) {
  CheckReport rep("commutative");
  rep.add(assoc_axiom("ASSOC-1", a.mul));
  int n = a.dim;
  rep.add(check_tuples("COMM-1", n, 2, [&](const std::vector<int>& t) {
    return std::pair(a.mul.left_mat(t[0]).column(t[1]), a.mul.left_mat(t[1]).column(t[0]));
  }));
  return rep;
}

CheckReport check_averaging_algebra(const AveragingAlgebra& a) {
  if (a.alpha.rows() != a.dim() || a.alpha.cols() != a.dim())
    throw shape_error("averaging operator shape mismatch");
  CheckReport rep("averaging-algebra");
  rep.add(assoc_axiom("ASSOC-1", a.alg.mul));
  add_averaging_axioms(rep, a.alg.mul, a.alpha, "AVG-1a", "AVG-1b");
  return rep;
}

CheckReport check_perm(const PermAlgebra& p) {
  CheckReport rep("perm");
  int n = p.dim;
  rep.add(assoc_axiom("PERM-1", p.mul));
  rep.add(check_tuples("PERM-2", n, 3, [&](const std::vector<int>& t) {
    Vec ij = p.mul.left_mat(t[0]).column(t[1]);
    Vec ji = p.mul.left_mat(t[1]).column(t[0]);
    Vec ek = basis_vec(n, t[2]);
    return std::pair(p.mul.mul(ij, ek), p.mul.mul(ji, ek));
  }));
  return rep;
}

CheckReport check_dendriform(const DendriformData& d) {
  if (d.succ.dim() != d.dim || d.prec.dim() != d.dim)
    throw shape_error("dendriform tables: dim mismatch");
  CheckReport rep("dendriform");
  int n = d.dim;
  auto ev = [&](const Cubic& c, const Vec& x, const Vec& y) { return c.mul(x, y); };
  rep.add(check_tuples("DEND-1", n, 3, [&](const std::vector<int>& t) {
    Vec e1 = basis_vec(n, t[0]), e2 = basis_vec(n, t[1]), e3 = basis_vec(n, t[2]);
    Vec lhs = ev(d.prec, ev(d.prec, e1, e2), e3);
    Vec rhs = ev(d.prec, e1, add(ev(d.prec, e2, e3), ev(d.succ, e2, e3)));
    return std::pair(lhs, rhs);
  }));
  rep.add(check_tuples("DEND-2", n, 3, [&](const std::vector<int>& t) {
    Vec e1 = basis_vec(n, t[0]), e2 = basis_vec(n, t[1]), e3 = basis_vec(n, t[2]);
    Vec lhs = ev(d.prec, ev(d.succ, e1, e2), e3);
    Vec rhs = ev(d.succ, e1, ev(d.prec, e2, e3));
    return std::pair(lhs, rhs);
  }));
  rep.add(check_tuples("DEND-3", n, 3, [&](const std::vector<int>& t) {
    Vec e1 = basis_vec(n, t[0]), e2 = basis_vec(n, t[1]), e3 = basis_vec(n, t[2]);
    Vec lhs = ev(d.succ, add(ev(d.prec, e1, e2), ev(d.succ, e1, e2)), e3);
    Vec rhs = ev(d.succ, e1, ev(d.succ, e2, e3));
    return std::pair(lhs, rhs);
  }));
  return rep;
}

CheckReport check_averaging_dendriform(const DendriformData& d) {
  CheckReport rep = check_dendriform(d);
  rep.set_kind("averaging-dendriform");
  if (!d.alpha) throw shape_error("averaging-dendriform: operator missing");
  add_averaging_axioms(rep, d.succ, *d.alpha, "AVGDEND-1", "AVGDEND-2");
  add_averaging_axioms(rep, d.prec, *d.alpha, "AVGDEND-3", "AVGDEND-4");
  return rep;
}

CheckReport check_pre_lie(const StructureConstants& circ) {
  CheckReport rep("pre-lie");
  int n = circ.dim();
  rep.add(check_tuples("PRELIE-1", n, 3, [&](const std::vector<int>& t) {
    Vec e1 = basis_vec(n, t[0]), e2 = basis_vec(n, t[1]), e3 = basis_vec(n, t[2]);
    Vec lhs = sub(circ.mul(circ.mul(e1, e2), e3), circ.mul(e1, circ.mul(e2, e3)));
    Vec rhs = sub(circ.mul(circ.mul(e2, e1), e3), circ.mul(e2, circ.mul(e1, e3)));
    return std::pair(lhs, rhs);
  }));
  return rep;
}

CheckReport check_quadratic_pre_lie(const PreLieQuadratic& q) {
  if (q.omega.rows() != q.dim || q.omega.cols() != q.dim)
    throw shape_error("quadratic pre-Lie form shape mismatch");
  CheckReport rep = check_pre_lie(q.circ);
  rep.set_kind("quadratic-pre-lie");
  rep.add(check_matrix_eq("OMEGA-1", q.omega, -q.omega.transpose()));
  if (q.omega.rank() == q.dim) {
    rep.add(axiom_bool("OMEGA-2", true));
  } else {
    Vec ker = q.omega.kernel_vector().value_or(zero_vec(q.dim));
    rep.add(axiom_bool("OMEGA-2", false, Witness{{}, ker, zero_vec(q.dim)}));
  }
  int n = q.dim;
  rep.add(check_tuples("OMEGA-3", n, 3, [&](const std::vector<int>& t) {
    // omega(q1 q2, q3) vs -omega(q2, q1 q3 - q3 q1)
    Vec q12 = q.circ.mul(basis_vec(n, t[0]), basis_vec(n, t[1]));
    Rat l = 0;
    for (int s = 0; s < n; ++s) l += q12[s] * q.omega.at(s, t[2]);
    Vec q13 = sub(q.circ.mul(basis_vec(n, t[0]), basis_vec(n, t[2])),
                  q.circ.mul(basis_vec(n, t[2]), basis_vec(n, t[0])));
    Rat r = 0;
    for (int s = 0; s < n; ++s) r -= q.omega.at(t[1], s) * q13[s];
    return std::pair(Vec{l}, Vec{r});
  }));
  return rep;
}

CheckReport check_lie(const LieAlgebra& l) {
  CheckReport rep("lie");
  int n = l.dim;
  rep.add(check_tuples("LIE-1", n, 2, [&](const std::vector<int>& t) {
    Vec lhs = l.bracket.left_mat(t[0]).column(t[1]);
    Vec rhs = scaled(l.bracket.left_mat(t[1]).column(t[0]), Rat(-1));
    return std::pair(lhs, rhs);
  }));
  rep.add(check_tuples("LIE-2", n, 3, [&](const std::vector<int>& t) {
    Vec e1 = basis_vec(n, t[0]), e2 = basis_vec(n, t[1]), e3 = basis_vec(n, t[2]);
    auto br = [&](const Vec& x, const Vec& y) { return l.bracket.mul(x, y); };
    Vec jac = add(br(br(e1, e2), e3), add(br(br(e2, e3), e1), br(br(e3, e1), e2)));
    return std::pair(jac, zero_vec(n));
  }));
  return rep;
}

std::pair<AveragingAlgebra, AveragingAlgebra> derived_products(const AveragingAlgebra& a,
                                                               bool force) {
  require(check_averaging_algebra(a), force, "derived_products: input fails averaging suite");
  int n = a.dim();
  Cubic bullet(n), star(n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      Vec bi = a.alg.mul.mul(a.alpha.column(i), basis_vec(n, j));
      Vec st = a.alg.mul.mul(basis_vec(n, i), a.alpha.column(j));
      for (int k = 0; k < n; ++k) {
        bullet.at(i, j, k) = bi[k];
        star.at(i, j, k) = st[k];
      }
    }
  }
  return {AveragingAlgebra{{n, bullet}, a.alpha}, AveragingAlgebra{{n, star}, a.alpha}};
}

PermAlgebra induce_perm(const AveragingAlgebra& a, bool force) {
  CheckReport gate = check_commutative(a.alg);
  gate.merge(check_averaging_algebra(a));
  require(gate, force, "induce_perm: input is not a commutative averaging algebra");
  int n = a.dim();
  Cubic bullet(n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      Vec v = a.alg.mul.mul(a.alpha.column(i), basis_vec(n, j));
      for (int k = 0; k < n; ++k) bullet.at(i, j, k) = v[k];
    }
  }
  return PermAlgebra{n, bullet};
}

AveragingAlgebra associated_averaging_algebra(const DendriformData& d, bool force) {
  require(check_averaging_dendriform(d), force,
          "associated_averaging_algebra: input fails dendriform suite");
  return AveragingAlgebra{{d.dim, d.succ + d.prec}, *d.alpha};
}

DendriformData dendriform_from_rota_baxter(const AveragingAlgebra& a, const LinOp& R,
                                           bool force) {
  int n = a.dim();
  if (R.rows() != n || R.cols() != n) throw shape_error("Rota-Baxter operator shape mismatch");
  CheckReport gate = check_averaging_algebra(a);
  // Weight-0 law R(x)R(y) = R(R(x)y + xR(y)) plus commutation with alpha.
  gate.add(check_tuples("RB-0-2", n, 2, [&](const std::vector<int>& t) {
    Vec lhs = a.alg.mul.mul(R.column(t[0]), R.column(t[1]));
    Vec inner = add(a.alg.mul.mul(R.column(t[0]), basis_vec(n, t[1])),
                    a.alg.mul.mul(basis_vec(n, t[0]), R.column(t[1])));
    return std::pair(lhs, R.apply(inner));
  }));
  gate.add(check_matrix_eq("RB-COMMUTE", R * a.alpha, a.alpha * R));
  require(gate, force, "dendriform_from_rota_baxter: operator fails the Rota-Baxter gate");

  DendriformData d{n, Cubic(n), Cubic(n), a.alpha};
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      Vec s = a.alg.mul.mul(R.column(i), basis_vec(n, j));
      Vec p = a.alg.mul.mul(basis_vec(n, i), R.column(j));
      for (int k = 0; k < n; ++k) {
        d.succ.at(i, j, k) = s[k];
        d.prec.at(i, j, k) = p[k];
      }
    }
  }
  return d;
}

LieAlgebra tensor_lie(const PermAlgebra& p, const PreLieQuadratic& q, bool force) {
  CheckReport gate = check_perm(p);
  gate.merge(check_quadratic_pre_lie(q));
  require(gate, force, "tensor_lie: inputs fail perm / quadratic pre-Lie suites");
  int np = p.dim, nq = q.dim;
  int N = np * nq;
  if (N > kMaxDim) throw shape_error("tensor_lie: dimension exceeds cap");
  LieAlgebra out{N, Cubic(N)};
  for (int i = 0; i < np; ++i)
    for (int a = 0; a < nq; ++a)
      for (int j = 0; j < np; ++j)
        for (int b = 0; b < nq; ++b) {
          int I = i * nq + a, J = j * nq + b;
          for (int k = 0; k < np; ++k)
            for (int c = 0; c < nq; ++c) {
              Rat val = p.mul.at(i, j, k) * q.circ.at(a, b, c) -
                        p.mul.at(j, i, k) * q.circ.at(b, a, c);
              if (val != 0) out.bracket.at(I, J, k * nq + c) = val;
            }
        }
  return out;
}

}  // namespace avgbi
