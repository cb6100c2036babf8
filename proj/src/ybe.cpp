#include "avgbi/ybe.hpp"

namespace avgbi {

namespace {

void require(const CheckReport& rep, bool force, const char* what) {
  if (!force && !rep.ok()) throw validation_error(what, rep);
}

bool is_regular_bimodule(const AveragingBimodule& m) {
  if (m.mdim != m.base.dim() || m.beta != m.base.alpha) return false;
  for (int i = 0; i < m.base.dim(); ++i) {
    if (m.lact[i] != m.base.alg.mul.left_mat(i)) return false;
    if (m.ract[i] != m.base.alg.mul.right_mat(i)) return false;
  }
  return true;
}

}  // namespace

ComultTable coboundary_comultiplication(const Algebra& alg, const TwoTensor& r) {
  int n = alg.dim;
  if (r.rows() != n || r.cols() != n) throw shape_error("coboundary: dim mismatch");
  ComultTable d(n);
  for (int i = 0; i < n; ++i) {
    Matrix slice = r * alg.mul.left_mat(i).transpose() - alg.mul.right_mat(i) * r;
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) d.at(i, j, k) = slice.at(j, k);
  }
  return d;
}

CheckReport check_avg_ybe(const AveragingAlgebra& a, const LinOp& beta, const TwoTensor& r) {
  int n = a.dim();
  if (r.rows() != n || r.cols() != n || beta.rows() != n || beta.cols() != n)
    throw shape_error("ybe: dim mismatch");
  CheckReport rep(beta == a.alpha ? "YBE in averaging algebra" : "beta-YBE");
  rep.add(check_zero_cubic("YBE-1", ybe_triple(a.alg.mul, r)));
  rep.add(check_zero_matrix("YBE-2", a.alpha * r - r * beta.transpose()));
  rep.add(check_zero_matrix("YBE-3", beta * r - r * a.alpha.transpose()));
  return rep;
}

CheckReport check_coboundary_conditions(const AveragingAlgebra& a, const LinOp& beta,
                                        const TwoTensor& r) {
  int n = a.dim();
  if (r.rows() != n || r.cols() != n) throw shape_error("coba: dim mismatch");
  CheckReport rep("coboundary-conditions");
  const Cubic& mul = a.alg.mul;
  Matrix u = beta * r - r * a.alpha.transpose();  // (beta (x) id - id (x) alpha)(r)
  Matrix v = a.alpha * r - r * beta.transpose();  // (alpha (x) id - id (x) beta)(r)
  Matrix rsym = r + r.transpose();

  rep.add(check_tuples_matrix("COBA-1", n, 2, [&](const std::vector<int>& t) {
    Matrix w = rsym * mul.left_mat(t[1]).transpose() - mul.right_mat(t[1]) * rsym;
    Matrix lhs = mul.left_mat(t[0]) * w - w * mul.right_mat(t[0]).transpose();
    return std::pair(lhs, Matrix(n, n));
  }));

  ThreeTensor triple = ybe_triple(mul, r);
  rep.add(check_tuples("COBA-2", n, 1, [&](const std::vector<int>& t) {
    Matrix L = mul.left_mat(t[0]), R = mul.right_mat(t[0]);
    Cubic out(n);
    for (int p = 0; p < n; ++p)
      for (int q = 0; q < n; ++q)
        for (int s = 0; s < n; ++s) {
          Rat acc = 0;
          for (int w = 0; w < n; ++w)
            acc += triple.at(p, q, w) * L.at(s, w) - R.at(p, w) * triple.at(w, q, s);
          out.at(p, q, s) = acc;
        }
    return std::pair(out.flat(), Cubic(n).flat());
  }));

  auto Lof = [&](const Vec& x) { return mul.left_mat(x); };
  auto Rof = [&](const Vec& x) { return mul.right_mat(x); };
  auto zero = Matrix(n, n);

  rep.add(check_tuples_matrix("COBA-3", n, 1, [&](const std::vector<int>& t) {
    Vec ba = beta.column(t[0]);
    Matrix lhs = u * Lof(ba).transpose() - Rof(ba) * v;
    return std::pair(lhs, zero);
  }));
  rep.add(check_tuples_matrix("COBA-4", n, 1, [&](const std::vector<int>& t) {
    Vec ba = beta.column(t[0]);
    Matrix L = mul.left_mat(t[0]), R = mul.right_mat(t[0]);
    Matrix lhs = u * (beta * L * 2 - Lof(ba)).transpose() + (beta * R * 2 - Rof(ba)) * v;
    return std::pair(lhs, zero);
  }));
  rep.add(check_tuples_matrix("COBA-5", n, 1, [&](const std::vector<int>& t) {
    Vec aa = a.alpha.column(t[0]);
    Matrix lhs = u * Lof(aa).transpose() - Rof(aa) * u;
    return std::pair(lhs, zero);
  }));
  rep.add(check_tuples_matrix("COBA-6", n, 1, [&](const std::vector<int>& t) {
    Vec aa = a.alpha.column(t[0]);
    Matrix L = mul.left_mat(t[0]), R = mul.right_mat(t[0]);
    Matrix lhs = u * (a.alpha * L * 2 - Lof(aa)).transpose() + (beta * R * 2 - Rof(aa)) * u;
    return std::pair(lhs, zero);
  }));
  rep.add(check_tuples_matrix("COBA-7", n, 1, [&](const std::vector<int>& t) {
    Vec aa = a.alpha.column(t[0]);
    Matrix lhs = v * Lof(aa).transpose() - Rof(aa) * v;
    return std::pair(lhs, zero);
  }));
  rep.add(check_tuples_matrix("COBA-8", n, 1, [&](const std::vector<int>& t) {
    Vec aa = a.alpha.column(t[0]);
    Matrix L = mul.left_mat(t[0]), R = mul.right_mat(t[0]);
    Matrix lhs = v * (beta * L * 2 - Lof(aa)).transpose() + (a.alpha * R * 2 - Rof(aa)) * v;
    return std::pair(lhs, zero);
  }));
  return rep;
}

Matrix r_sharp_matrix(const TwoTensor& r) { return r.transpose(); }

Matrix r_natural_matrix(const TwoTensor& r) { return -r; }

CheckReport verify_o_operator(const OOperatorData& data, const std::optional<Rat>& weight) {
  const AveragingBimodule& m = data.bimod;
  int n = m.base.dim(), md = m.mdim;
  if (data.P.rows() != n || data.P.cols() != md)
    throw shape_error("o-operator: P must map M into A");
  if (weight) {
    if (!is_regular_bimodule(m))
      throw shape_error("weighted Rota-Baxter law applies to the regular bimodule only");
    return check_rota_baxter(m.base, data.P, *weight);
  }
  CheckReport rep("o-operator");
  rep.add(check_matrix_eq("OOP-1", m.base.alpha * data.P, data.P * m.beta));
  rep.add(check_tuples("OOP-2", md, 2, [&](const std::vector<int>& t) {
    Vec pi = data.P.column(t[0]), pj = data.P.column(t[1]);
    Vec lhs = m.base.alg.mul.mul(pi, pj);
    Vec inner = add(act_of(m.lact, pi).column(t[1]), act_of(m.ract, pj).column(t[0]));
    return std::pair(lhs, data.P.apply(inner));
  }));
  return rep;
}

CheckReport check_rota_baxter(const AveragingAlgebra& a, const LinOp& R, const Rat& weight) {
  int n = a.dim();
  if (R.rows() != n || R.cols() != n) throw shape_error("rota-baxter: shape mismatch");
  std::string tag = "RB-" + rational_str(weight);
  CheckReport rep(tag);
  rep.add(check_matrix_eq(tag + "-1", R * a.alpha, a.alpha * R));
  rep.add(check_tuples(tag + "-2", n, 2, [&](const std::vector<int>& t) {
    Vec lhs = a.alg.mul.mul(R.column(t[0]), R.column(t[1]));
    Vec inner = add(a.alg.mul.mul(R.column(t[0]), basis_vec(n, t[1])),
                    a.alg.mul.mul(basis_vec(n, t[0]), R.column(t[1])));
    inner = add(inner, scaled(a.alg.mul.left_mat(t[0]).column(t[1]), weight));
    return std::pair(lhs, R.apply(inner));
  }));
  return rep;
}

CheckReport check_rb_on_frobenius(const AveragingAlgebra& a, const BilinearForm& form,
                                  const LinOp& R, const Rat& weight) {
  CheckReport rep = check_rota_baxter(a, R, weight);
  std::string tag = "RB-" + rational_str(weight);
  int n = a.dim();
  rep.add(check_tuples(tag + "-3", n, 2, [&](const std::vector<int>& t) {
    Rat acc = weight * form.B.at(t[0], t[1]);
    for (int s = 0; s < n; ++s)
      acc += R.at(s, t[0]) * form.B.at(s, t[1]) + form.B.at(t[0], s) * R.at(s, t[1]);
    return std::pair(Vec{acc}, Vec{Rat(0)});
  }));
  return rep;
}

SemidirectYbe ybe_from_o_operator(const AveragingAlgebra& a, const AveragingBimodule& bimod,
                                  const Matrix& P, const LinOp& beta, const Matrix& gamma2,
                                  bool force) {
  require(check_averaging_bimodule(bimod), force, "ybe_from_o_operator: bimodule suite fails");
  int n = a.dim(), md = bimod.mdim, N = n + md;
  AveragingBimodule dual = dual_averaging_bimodule(bimod);
  SemidirectYbe out;
  out.semi = semidirect_product(a, dual, /*force=*/true);
  out.r = TwoTensor(N, N);
  for (int j = 0; j < md; ++j)
    for (int i = 0; i < n; ++i) {
      out.r.at(i, n + j) += P.at(i, j);
      out.r.at(n + j, i) -= P.at(i, j);
    }
  Matrix big_beta = diag_sum(beta, gamma2.transpose());
  out.report = check_avg_ybe(out.semi, big_beta, out.r);
  out.report.set_kind("ybe-from-o-operator");
  out.report.add(check_matrix_eq("OPEQ-1", a.alpha * P, P * gamma2));
  out.report.add(check_matrix_eq("OPEQ-2", beta * P, P * bimod.beta));
  out.report.add(check_tuples("OOP-2", md, 2, [&](const std::vector<int>& t) {
    Vec pi = P.column(t[0]), pj = P.column(t[1]);
    Vec lhs = a.alg.mul.mul(pi, pj);
    Vec inner = add(act_of(bimod.lact, pi).column(t[1]), act_of(bimod.ract, pj).column(t[0]));
    return std::pair(lhs, P.apply(inner));
  }));
  return out;
}

DendriformData dendriform_from_o_operator(const OOperatorData& data, bool force) {
  require(verify_o_operator(data), force, "dendriform_from_o_operator: O-operator suite fails");
  const AveragingBimodule& m = data.bimod;
  int md = m.mdim;
  DendriformData d{md, Cubic(md), Cubic(md), m.beta};
  for (int i = 0; i < md; ++i) {
    Matrix li = act_of(m.lact, data.P.column(i));
    Matrix ri = act_of(m.ract, data.P.column(i));
    for (int j = 0; j < md; ++j)
      for (int k = 0; k < md; ++k) {
        d.succ.at(i, j, k) = li.at(k, j);
        d.prec.at(j, i, k) = ri.at(k, j);
      }
  }
  return d;
}

SemidirectYbe canonical_ybe_from_dendriform(const DendriformData& d, bool force) {
  require(check_averaging_dendriform(d), force,
          "canonical_ybe_from_dendriform: dendriform suite fails");
  AveragingAlgebra assoc = associated_averaging_algebra(d, /*force=*/true);
  int n = d.dim, N = 2 * n;
  AveragingBimodule bm{assoc, n, {}, {}, *d.alpha};
  for (int i = 0; i < n; ++i) {
    bm.lact.push_back(d.succ.left_mat(i));
    bm.ract.push_back(d.prec.right_mat(i));
  }
  AveragingBimodule dual = dual_averaging_bimodule(bm);
  SemidirectYbe out;
  out.semi = semidirect_product(assoc, dual, /*force=*/true);
  out.r = TwoTensor(N, N);
  for (int i = 0; i < n; ++i) {
    out.r.at(i, n + i) = 1;
    out.r.at(n + i, i) = -1;
  }
  out.report = check_avg_ybe(out.semi, out.semi.alpha, out.r);
  return out;
}

CheckReport check_perm_ybe(const PermAlgebra& p, const TwoTensor& r) {
  int n = p.dim;
  if (r.rows() != n || r.cols() != n) throw shape_error("perm ybe: dim mismatch");
  Cubic out(n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      const Rat& rab = r.at(a, b);
      if (rab == 0) continue;
      for (int c = 0; c < n; ++c)
        for (int e = 0; e < n; ++e) {
          const Rat& rce = r.at(c, e);
          if (rce == 0) continue;
          Rat w = rab * rce;
          for (int s = 0; s < n; ++s) {
            // r12 r23: x (x) (y . x') (x) y'
            if (p.mul.at(b, c, s) != 0) out.at(a, s, e) += w * p.mul.at(b, c, s);
            // r13 r23: x (x) x' (x) (y . y')
            if (p.mul.at(b, e, s) != 0) out.at(a, c, s) -= w * p.mul.at(b, e, s);
            // r12 r13 and r13 r12: (x . x') in the first slot
            if (p.mul.at(a, c, s) != 0) {
              out.at(s, b, e) += w * p.mul.at(a, c, s);
              out.at(s, e, b) -= w * p.mul.at(a, c, s);
            }
          }
        }
    }
  CheckReport rep("perm-ybe");
  rep.add(check_zero_cubic("PYBE-1", out));
  return rep;
}

CheckReport check_cybe(const LieAlgebra& l, const TwoTensor& r) {
  int n = l.dim;
  if (r.rows() != n || r.cols() != n) throw shape_error("cybe: dim mismatch");
  Cubic out(n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      const Rat& rab = r.at(a, b);
      if (rab == 0) continue;
      for (int c = 0; c < n; ++c)
        for (int e = 0; e < n; ++e) {
          const Rat& rce = r.at(c, e);
          if (rce == 0) continue;
          Rat w = rab * rce;
          for (int s = 0; s < n; ++s) {
            if (l.bracket.at(a, c, s) != 0) out.at(s, b, e) += w * l.bracket.at(a, c, s);
            if (l.bracket.at(b, c, s) != 0) out.at(a, s, e) += w * l.bracket.at(b, c, s);
            if (l.bracket.at(b, e, s) != 0) out.at(a, c, s) += w * l.bracket.at(b, e, s);
          }
        }
    }
  CheckReport rep("cybe");
  rep.add(check_zero_cubic("CYBE-1", out));
  return rep;
}

TwoTensor lift_r_to_lie(const PermAlgebra& p, const PreLieQuadratic& q, const TwoTensor& r) {
  auto finv = q.omega.inverse();
  if (!finv) throw shape_error("lift_r_to_lie: degenerate form");
  int np = p.dim, nq = q.dim, N = np * nq;
  if (r.rows() != np || r.cols() != np) throw shape_error("lift_r_to_lie: dim mismatch");
  // Column j of omega^-1 is the dual basis vector f_j.
  TwoTensor out(N, N);
  for (int i = 0; i < np; ++i)
    for (int k = 0; k < np; ++k) {
      if (r.at(i, k) == 0) continue;
      for (int a = 0; a < nq; ++a)
        for (int b = 0; b < nq; ++b) {
          Rat w = r.at(i, k) * finv->at(b, a);
          if (w != 0) out.at(i * nq + a, k * nq + b) += w;
        }
    }
  return out;
}

Cubic dual_r_product(const Algebra& a, const TwoTensor& r) {
  int n = a.dim;
  Matrix sharp = r_sharp_matrix(r), nat = r_natural_matrix(r);
  Cubic mul(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Vec col = add(a.mul.right_mat(sharp.column(i)).transpose().column(j),
                    a.mul.left_mat(nat.column(j)).transpose().column(i));
      for (int k = 0; k < n; ++k) mul.at(i, j, k) = col[k];
    }
  return mul;
}

}  // namespace avgbi
