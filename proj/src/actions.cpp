#include "avgbi/actions.hpp"

namespace avgbi {

namespace {

void check_action_shapes(int n, int mdim, const std::vector<Matrix>& lact,
                         const std::vector<Matrix>& ract) {
  if (static_cast<int>(lact.size()) != n || static_cast<int>(ract.size()) != n)
    throw shape_error("action arrays must have one matrix per base basis vector");
  for (const auto& m : lact)
    if (m.rows() != mdim || m.cols() != mdim) throw shape_error("left action shape mismatch");
  for (const auto& m : ract)
    if (m.rows() != mdim || m.cols() != mdim) throw shape_error("right action shape mismatch");
}

void require(const CheckReport& rep, bool force, const char* what) {
  if (!force && !rep.ok()) throw validation_error(what, rep);
}

}  // namespace

Matrix act_of(const std::vector<Matrix>& act, const Vec& x) {
  Matrix out(act.empty() ? 0 : act[0].rows(), act.empty() ? 0 : act[0].cols());
  for (size_t i = 0; i < act.size(); ++i) {
    if (x[i] == 0) continue;
    out = out + act[i] * x[i];
  }
  return out;
}

CheckReport check_assoc_bimodule(const Algebra& base, int mdim,
                                 const std::vector<Matrix>& lact,
                                 const std::vector<Matrix>& ract) {
  check_action_shapes(base.dim, mdim, lact, ract);
  CheckReport rep("assoc-bimodule");
  int n = base.dim;
  rep.add(check_tuples_matrix("BIM-1", n, 2, [&](const std::vector<int>& t) {
    Vec prod = base.mul.left_mat(t[0]).column(t[1]);
    return std::pair(act_of(lact, prod), lact[t[0]] * lact[t[1]]);
  }));
  rep.add(check_tuples_matrix("BIM-2", n, 2, [&](const std::vector<int>& t) {
    return std::pair(lact[t[0]] * ract[t[1]], ract[t[1]] * lact[t[0]]);
  }));
  rep.add(check_tuples_matrix("BIM-3", n, 2, [&](const std::vector<int>& t) {
    Vec prod = base.mul.left_mat(t[0]).column(t[1]);
    return std::pair(act_of(ract, prod), ract[t[1]] * ract[t[0]]);
  }));
  return rep;
}

CheckReport check_averaging_bimodule(const AveragingBimodule& m) {
  CheckReport rep = check_assoc_bimodule(m.base.alg, m.mdim, m.lact, m.ract);
  rep.set_kind("averaging-bimodule");
  if (m.beta.rows() != m.mdim || m.beta.cols() != m.mdim)
    throw shape_error("module operator shape mismatch");
  int n = m.base.dim();
  auto l_alpha = [&](int i) { return act_of(m.lact, m.base.alpha.column(i)); };
  auto r_alpha = [&](int i) { return act_of(m.ract, m.base.alpha.column(i)); };
  rep.add(check_tuples_matrix("ADM-1a", n, 1, [&](const std::vector<int>& t) {
    return std::pair(l_alpha(t[0]) * m.beta, m.beta * l_alpha(t[0]));
  }));
  rep.add(check_tuples_matrix("ADM-1b", n, 1, [&](const std::vector<int>& t) {
    return std::pair(l_alpha(t[0]) * m.beta, m.beta * m.lact[t[0]] * m.beta);
  }));
  rep.add(check_tuples_matrix("ADM-2a", n, 1, [&](const std::vector<int>& t) {
    return std::pair(r_alpha(t[0]) * m.beta, m.beta * r_alpha(t[0]));
  }));
  rep.add(check_tuples_matrix("ADM-2b", n, 1, [&](const std::vector<int>& t) {
    return std::pair(r_alpha(t[0]) * m.beta, m.beta * m.ract[t[0]] * m.beta);
  }));
  return rep;
}

CheckReport check_perm_bimodule(const PermBimodule& m) {
  check_action_shapes(m.base.dim, m.mdim, m.lact, m.ract);
  CheckReport rep("perm-bimodule");
  int n = m.base.dim;
  auto bullet = [&](int i, int j) { return m.base.mul.left_mat(i).column(j); };
  rep.add(check_tuples_matrix("PBIM-1", n, 2, [&](const std::vector<int>& t) {
    return std::pair(act_of(m.lact, bullet(t[0], t[1])), m.lact[t[0]] * m.lact[t[1]]);
  }));
  rep.add(check_tuples_matrix("PBIM-2", n, 2, [&](const std::vector<int>& t) {
    return std::pair(m.lact[t[0]] * m.lact[t[1]], m.lact[t[1]] * m.lact[t[0]]);
  }));
  rep.add(check_tuples_matrix("PBIM-3", n, 2, [&](const std::vector<int>& t) {
    return std::pair(act_of(m.ract, bullet(t[0], t[1])), m.ract[t[1]] * m.ract[t[0]]);
  }));
  // Chain r(p2) r(p1) = r(p2) l(p1) = l(p1) r(p2) as one axiom: both links
  // are compared at once via concatenated coordinates.
  rep.add(check_tuples("PBIM-4", n, 2, [&](const std::vector<int>& t) {
    Vec a = (m.ract[t[1]] * m.ract[t[0]]).flat();
    Vec b = (m.ract[t[1]] * m.lact[t[0]]).flat();
    Vec c = (m.lact[t[0]] * m.ract[t[1]]).flat();
    Vec lhs(a), rhs(b);
    lhs.insert(lhs.end(), b.begin(), b.end());
    rhs.insert(rhs.end(), c.begin(), c.end());
    return std::pair(lhs, rhs);
  }));
  return rep;
}

AveragingBimodule regular_bimodule(const AveragingAlgebra& a) {
  return regular_bimodule(a, a.alpha);
}

AveragingBimodule regular_bimodule(const AveragingAlgebra& a, const Matrix& beta) {
  int n = a.dim();
  AveragingBimodule m{a, n, {}, {}, beta};
  for (int i = 0; i < n; ++i) {
    m.lact.push_back(a.alg.mul.left_mat(i));
    m.ract.push_back(a.alg.mul.right_mat(i));
  }
  return m;
}

PermBimodule perm_regular_bimodule(const PermAlgebra& p) {
  PermBimodule m{p, p.dim, {}, {}};
  for (int i = 0; i < p.dim; ++i) {
    m.lact.push_back(p.mul.left_mat(i));
    m.ract.push_back(p.mul.right_mat(i));
  }
  return m;
}

AveragingAlgebra semidirect_product(const AveragingAlgebra& a, const AveragingBimodule& m,
                                    bool force) {
  if (m.base.alg.mul != a.alg.mul || m.base.alpha != a.alpha)
    throw shape_error("semidirect_product: bimodule is based on a different algebra");
  require(check_averaging_bimodule(m), force, "semidirect_product: bimodule suite fails");
  int n = a.dim(), md = m.mdim, N = n + md;
  if (N > kMaxDim) throw shape_error("semidirect_product: dimension exceeds cap");
  Cubic mul(N);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) mul.at(i, j, k) = a.alg.mul.at(i, j, k);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < md; ++j)
      for (int k = 0; k < md; ++k) {
        mul.at(i, n + j, n + k) = m.lact[i].at(k, j);
        mul.at(n + j, i, n + k) = m.ract[i].at(k, j);
      }
  return AveragingAlgebra{{N, mul}, diag_sum(a.alpha, m.beta)};
}

AveragingBimodule dual_averaging_bimodule(const AveragingBimodule& m) {
  AveragingBimodule out{m.base, m.mdim, {}, {}, m.beta.transpose()};
  for (int i = 0; i < m.base.dim(); ++i) {
    out.lact.push_back(m.ract[i].transpose());
    out.ract.push_back(m.lact[i].transpose());
  }
  return out;
}

PermAlgebra perm_semidirect(const PermAlgebra& p, const PermBimodule& m, bool force) {
  if (m.base.mul != p.mul) throw shape_error("perm_semidirect: bimodule base mismatch");
  require(check_perm_bimodule(m), force, "perm_semidirect: bimodule suite fails");
  int n = p.dim, md = m.mdim, N = n + md;
  if (N > kMaxDim) throw shape_error("perm_semidirect: dimension exceeds cap");
  Cubic mul(N);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) mul.at(i, j, k) = p.mul.at(i, j, k);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < md; ++j)
      for (int k = 0; k < md; ++k) {
        mul.at(i, n + j, n + k) = m.lact[i].at(k, j);
        mul.at(n + j, i, n + k) = m.ract[i].at(k, j);
      }
  return PermAlgebra{N, mul};
}

PermBimodule perm_dual_bimodule(const PermBimodule& m, bool force) {
  require(check_perm_bimodule(m), force, "perm_dual_bimodule: input fails the bimodule suite");
  PermBimodule out{m.base, m.mdim, {}, {}};
  for (int i = 0; i < m.base.dim; ++i) {
    Matrix lt = m.lact[i].transpose();
    out.lact.push_back(lt);
    out.ract.push_back(lt - m.ract[i].transpose());
  }
  return out;
}

PermBimodule induce_perm_bimodule(const AveragingAlgebra& a, const std::vector<Matrix>& mu,
                                  const Matrix& beta, bool force) {
  int n = a.dim();
  if (static_cast<int>(mu.size()) != n) throw shape_error("induce_perm_bimodule: action arity");
  int md = mu.empty() ? 0 : mu[0].rows();
  CheckReport gate = check_commutative(a.alg);
  gate.merge(check_averaging_bimodule(AveragingBimodule{a, md, mu, mu, beta}));
  require(gate, force, "induce_perm_bimodule: module gate fails");
  PermAlgebra perm = induce_perm(a, force);
  PermBimodule out{perm, md, {}, {}};
  for (int i = 0; i < n; ++i) {
    out.lact.push_back(act_of(mu, a.alpha.column(i)));
    out.ract.push_back(mu[i] * beta);
  }
  return out;
}

CheckReport check_dual_compat(const AveragingAlgebra& a, const std::vector<Matrix>& mu,
                              const Matrix& beta) {
  CheckReport rep("dual-compat");
  int n = a.dim();
  rep.add(check_tuples_matrix("DUALCOMPAT", n, 1, [&](const std::vector<int>& t) {
    Matrix lhs = beta * mu[t[0]];
    Matrix rhs = act_of(mu, a.alpha.column(t[0])) - mu[t[0]] * beta;
    return std::pair(lhs, rhs);
  }));
  return rep;
}

}  // namespace avgbi
