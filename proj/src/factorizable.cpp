#include "avgbi/factorizable.hpp"

namespace avgbi {

CheckReport check_lr_invariant(const Algebra& alg, const TwoTensor& t) {
  int n = alg.dim;
  if (t.rows() != n || t.cols() != n) throw shape_error("lr-invariant: dim mismatch");
  CheckReport rep("lr-invariant");
  AxiomResult res{"LRINV-1", true, std::nullopt};
  for (int i = 0; i < n && res.pass; ++i) {
    Matrix slice = t * alg.mul.left_mat(i).transpose() - alg.mul.right_mat(i) * t;
    for (int j = 0; j < n && res.pass; ++j)
      for (int k = 0; k < n; ++k) {
        if (slice.at(j, k) != 0) {
          res.pass = false;
          res.witness = Witness{{i, j, k}, {slice.at(j, k)}, {Rat(0)}};
          break;
        }
      }
  }
  rep.add(res);
  return rep;
}

Classification classify_r(const AveragingAlgebra& a, const LinOp& beta, const TwoTensor& r) {
  CheckReport rep = check_avg_ybe(a, beta, r);
  rep.set_kind("classification");
  auto [s, anti] = sym_split(r);
  (void)anti;
  rep.add(check_lr_invariant(a.alg, s).axioms().front());
  bool quasi = rep.ok();

  Matrix I = r_sharp_matrix(r) - r_natural_matrix(r);
  auto Iinv = I.inverse();
  AxiomResult f1 = axiom_bool("FACT-1", Iinv.has_value(),
                              Witness{{}, I.kernel_vector().value_or(zero_vec(a.dim())),
                                      zero_vec(a.dim())});
  AxiomResult f2 = check_matrix_eq("FACT-2", I * beta.transpose(), a.alpha * I);
  bool factorizable = quasi && f1.pass && f2.pass;
  // In the quasi-triangular case the two extra identities are informational.
  f1.informational = f2.informational = !factorizable;
  rep.add(f1);
  rep.add(f2);

  if (!quasi) return NotSolution{rep};
  if (!factorizable) return QuasiTriangular{rep};
  return FactorizableData{rep, r, I, *Iinv};
}

const CheckReport& classification_report(const Classification& c) {
  return std::visit([](const auto& v) -> const CheckReport& { return v.report; }, c);
}

std::pair<Vec, Vec> factorize_element(const FactorizableData& fact, const Vec& a) {
  Vec xi = fact.Iinv.apply(a);
  Vec plus = r_sharp_matrix(fact.r).apply(xi);
  Vec minus = scaled(r_natural_matrix(fact.r).apply(xi), Rat(-1));
  return {plus, minus};
}

RbFromFactorizable rb_from_factorizable(const FactorizableData& fact, const Rat& lambda) {
  if (lambda == 0) throw shape_error("rb_from_factorizable: weight must be nonzero");
  RbFromFactorizable out;
  out.form = BilinearForm{fact.Iinv.transpose()};
  out.R = r_natural_matrix(fact.r) * fact.Iinv * lambda;
  return out;
}

TwoTensor factorizable_from_rb(const AveragingAlgebra& a, const BilinearForm& form,
                               const LinOp& R, const Rat& lambda, bool force) {
  if (lambda == 0) throw shape_error("factorizable_from_rb: weight must be nonzero");
  CheckReport gate = check_frobenius_form(a.alg, form);
  gate.merge(check_rb_on_frobenius(a, form, R, lambda));
  if (!force && !gate.ok())
    throw validation_error("factorizable_from_rb: Frobenius/Rota-Baxter gate fails", gate);
  auto IB = form.B.transpose().inverse();
  if (!IB) throw shape_error("factorizable_from_rb: degenerate form");
  Matrix sharp = (R + Matrix::identity(a.dim()) * lambda) * *IB * (Rat(1) / lambda);
  return sharp.transpose();
}

TwistedBialgebra twisted_bialgebra(const AveragingAlgebra& a, const LinOp& beta,
                                   const FactorizableData& fact, const Rat& lambda) {
  if (lambda == 0) throw shape_error("twisted_bialgebra: weight must be nonzero");
  int n = a.dim();
  RbFromFactorizable rb = rb_from_factorizable(fact, lambda);
  const Matrix& R = rb.R;
  const Cubic& mul = a.alg.mul;

  TwistedBialgebra out;
  out.mulR = Cubic(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Vec v = add(mul.mul(R.column(i), basis_vec(n, j)),
                  mul.mul(basis_vec(n, i), R.column(j)));
      v = add(v, scaled(mul.left_mat(i).column(j), lambda));
      for (int k = 0; k < n; ++k) out.mulR.at(i, j, k) = v[k];
    }

  out.comulI = Cubic(n);
  for (int j = 0; j < n; ++j)
    for (int k = 0; k < n; ++k) {
      Vec prod = mul.mul(fact.I.column(j), fact.I.column(k));
      Vec w = scaled(fact.Iinv.apply(prod), Rat(1) / lambda);
      for (int i = 0; i < n; ++i) out.comulI.at(i, j, k) = w[i];
    }

  out.iso = fact.I * (Rat(1) / lambda);
  const Matrix& f = out.iso;

  CheckReport rep("twisted-intertwining");
  Cubic mul_r = dual_r_product(a.alg, fact.r);
  rep.add(check_tuples("TWIST-PROD", n, 2, [&](const std::vector<int>& t) {
    Vec lhs = f.apply(mul_r.left_mat(t[0]).column(t[1]));
    Vec rhs = out.mulR.mul(f.column(t[0]), f.column(t[1]));
    return std::pair(lhs, rhs);
  }));
  Cubic comul_dual = dual_comultiplication(mul);
  rep.add(check_tuples_matrix("TWIST-COMUL", n, 1, [&](const std::vector<int>& t) {
    Matrix lhs = f * comul_dual.slice(t[0]) * f.transpose();
    Matrix rhs = comul_apply(out.comulI, f.column(t[0]));
    return std::pair(lhs, rhs);
  }));
  // Operator intertwining for both operators: f beta* = alpha f, f alpha* = beta f.
  Matrix l1 = f * beta.transpose() - a.alpha * f;
  Matrix l2 = f * a.alpha.transpose() - beta * f;
  rep.add(check_zero_matrix("TWIST-OP", diag_sum(l1, l2)));
  out.intertwining = rep;
  return out;
}

}  // namespace avgbi
