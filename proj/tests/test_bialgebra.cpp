#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "avgbi/bialgebra.hpp"
#include "avgbi/ybe.hpp"
#include "helpers.hpp"

using namespace avgbi;
using namespace avgbi::test;

namespace {

// Commutative and cocommutative quadruple on two basis vectors.
AsiBialgebraData bia2() {
  return AsiBialgebraData{2, cubic(2, {{0, 0, 0, 1}, {0, 1, 1, 1}, {1, 0, 1, 1}}),
                          cubic(2, {{1, 1, 1, 1}}), op(2, {{0, 0, 1}}),
                          op(2, {{1, 1, 1}})};
}

// Erratum fixture: the printed coalgebra side is not averaging.
AsiBialgebraData bad311i() {
  return AsiBialgebraData{2, cubic(2, {{0, 1, 0, 1}, {1, 1, 1, 1}}),
                          cubic(2, {{0, 0, 0, 1}, {1, 1, 0, 1}}), op(2, {{1, 1, 1}}),
                          op(2, {{0, 1, 1}})};
}

// The antisymmetric-YBE fixture quadruple with its coboundary comultiplication.
AsiBialgebraData a3_bialgebra() {
  AveragingAlgebra a = fixture_a3();
  return AsiBialgebraData{3, a.alg.mul,
                          coboundary_comultiplication(a.alg, r_antisym3()), a.alpha,
                          fixture_a3_beta()};
}

AsiBialgebraData c3_bialgebra() {
  AveragingAlgebra a = fixture_c3();
  return AsiBialgebraData{3, a.alg.mul,
                          coboundary_comultiplication(a.alg, r_antisym3()), a.alpha,
                          Matrix(3, 3)};
}

// Perm bialgebras at dim 2 from a {0,1}-entry sweep over both tables.
template <class F>
void for_each_perm_bialgebra_dim2(F&& fn) {
  for (int mask = 0; mask < 256; ++mask) {
    Cubic mul(2);
    for (int s = 0; s < 8; ++s)
      if (mask & (1 << s)) mul.at((s >> 2) & 1, (s >> 1) & 1, s & 1) = 1;
    if (!check_perm(PermAlgebra{2, mul}).ok()) continue;
    for (int cmask = 0; cmask < 256; ++cmask) {
      Cubic comul(2);
      for (int s = 0; s < 8; ++s)
        if (cmask & (1 << s)) comul.at((s >> 2) & 1, (s >> 1) & 1, s & 1) = 1;
      PermBialgebraData pb{2, mul, comul};
      if (check_perm_bialgebra(pb).ok()) fn(pb);
    }
  }
}

}  // namespace

TEST_CASE("coassociativity and cocommutativity") {
  CHECK(check_coassoc(cubic(2, {{1, 1, 1, 1}})).ok());
  CHECK(check_cocomm(cubic(2, {{1, 1, 1, 1}})).ok());
  // Delta(e1) = e1 (x) e2 alone is not coassociative.
  CHECK(!check_coassoc(cubic(2, {{0, 0, 1, 1}})).ok());
  // The dual of a non-commutative associative product is coassociative but
  // not cocommutative: Delta(e1) = e1 (x) e2, Delta(e2) = e2 (x) e2.
  Cubic d = cubic(2, {{0, 0, 1, 1}, {1, 1, 1, 1}});
  CHECK(check_coassoc(d).ok());
  CHECK(!check_cocomm(d).find("COCOMM-1")->pass);
}

TEST_CASE("averaging coalgebra flags the printed erratum") {
  AsiBialgebraData bad = bad311i();
  CheckReport rep = check_averaging_coalgebra(bad.comul, bad.beta);
  CHECK(!rep.ok());
  const AxiomResult* ax = rep.find("AVGCO-1a");
  REQUIRE(ax != nullptr);
  CHECK(!ax->pass);
  CHECK(ax->witness->where == std::vector<int>{0});
  // (beta (x) beta) Delta(e1) = e2 (x) e2 against (beta (x) id) Delta beta(e1) = 0.
  CHECK(ax->witness->lhs == Vec{Rat(0), Rat(0), Rat(0), Rat(1)});
  CHECK(ax->witness->rhs == zero_vec(4));
}

TEST_CASE("averaging-asi suite on the fixtures") {
  CHECK(check_averaging_asi(bia2()).ok());
  CHECK(check_averaging_asi(a3_bialgebra()).ok());
  CHECK(check_averaging_asi(c3_bialgebra()).ok());
  CHECK(!check_averaging_asi(bad311i()).ok());
  // Zero comultiplication passes the asi clauses trivially.
  AsiBialgebraData zero{2, bia2().mul, Cubic(2), bia2().alpha, Matrix(2, 2)};
  CheckReport rep = check_averaging_asi(zero);
  CHECK(rep.passed("ASI-1"));
  CHECK(rep.passed("ASI-2"));
  CHECK(rep.ok());
}

TEST_CASE("frobenius form suite") {
  Algebra alg{2, cubic(2, {{0, 0, 0, 1}, {0, 1, 1, 1}, {1, 0, 1, 1}})};
  // form(e1,e2)=form(e2,e1)=1, form(e2,e2)=c is invariant symmetric nondegenerate.
  BilinearForm good{grid(2, {{0, 1, 1}, {1, 0, 1}})};
  CHECK(check_frobenius_form(alg, good).ok());
  BilinearForm degenerate{grid(2, {{0, 0, 1}})};
  CHECK(!check_frobenius_form(alg, degenerate).find("FORM-ND")->pass);
  BilinearForm skew{grid(2, {{0, 1, 1}, {1, 0, -1}})};
  CHECK(!check_frobenius_form(alg, skew).find("FORM-SYM")->pass);
}

TEST_CASE("adjoint operator") {
  BilinearForm id_form{Matrix::identity(3)};
  CHECK(adjoint_operator(Matrix::identity(3), id_form) == Matrix::identity(3));
  Matrix sym = grid(3, {{0, 1, 2}, {1, 0, 2}, {2, 2, 5}});
  CHECK(adjoint_operator(sym, id_form) == sym);
  CHECK_THROWS_AS((void)adjoint_operator(Matrix::identity(2), BilinearForm{Matrix(2, 2)}),
                  shape_error);
}

TEST_CASE("matched pair and bowtie of the commutative quadruple") {
  MatchedPairData mp = matched_pair_from_bialgebra(bia2());
  CheckReport rep = check_matched_pair_averaging(mp);
  CHECK(rep.passed("MP-1"));
  CHECK(rep.passed("MP-AVG"));

  BowtieResult bw = bowtie(mp);
  REQUIRE(bw.form_d.has_value());
  CHECK(check_double_construction(bw.alg, 2, bw.form_d).ok());
}

TEST_CASE("matched pair of the coboundary fixture") {
  MatchedPairData mp = matched_pair_from_bialgebra(a3_bialgebra());
  CHECK(check_matched_pair_averaging(mp).ok());
  CHECK_THROWS_AS((void)matched_pair_from_bialgebra(bad311i()), validation_error);
  // Zero comultiplication gives the semidirect-type matched pair with a
  // trivial dual product.
  AsiBialgebraData zero{2, bia2().mul, Cubic(2), bia2().alpha, Matrix(2, 2)};
  MatchedPairData mpz = matched_pair_from_bialgebra(zero);
  CHECK(mpz.algB.alg.mul.is_zero());
  CHECK(check_matched_pair_averaging(mpz).ok());
}

TEST_CASE("bowtie of zero structures keeps the pairing form nondegenerate") {
  AsiBialgebraData zero{2, Cubic(2), Cubic(2), Matrix(2, 2), Matrix(2, 2)};
  BowtieResult bw = bowtie(matched_pair_from_bialgebra(zero));
  CHECK(bw.alg.alg.mul.is_zero());
  REQUIRE(bw.form_d.has_value());
  CHECK(bw.form_d->B.rank() == 4);
  CHECK(bw.form_d->B == bw.form_d->B.transpose());
}

TEST_CASE("double of the coboundary fixture reproduces the printed entries") {
  DoubleBialgebra dbl = double_bialgebra(a3_bialgebra());
  const Cubic& mul = dbl.dbl.mul;
  // e1 * e1 = e1 and e2 * e2* = e2* * e2 = e1*.
  CHECK(mul.left_mat(0).column(0) == basis_vec(6, 0));
  CHECK(mul.left_mat(1).column(4) == basis_vec(6, 3));
  CHECK(mul.left_mat(4).column(1) == basis_vec(6, 3));
  // Delta(e1*) = -e1* (x) e1*.
  Matrix d3 = dbl.dbl.comul.slice(3);
  Matrix expect(6, 6);
  expect.at(3, 3) = -1;
  CHECK(d3 == expect);
  // Delta(e1) = -e2 (x) e3 - e3 (x) e2: the restriction to the base block.
  Matrix d0 = dbl.dbl.comul.slice(0);
  Matrix expect0(6, 6);
  expect0.at(1, 2) = -1;
  expect0.at(2, 1) = -1;
  CHECK(d0 == expect0);

  CHECK(check_averaging_asi(dbl.dbl).ok());
  // (alpha_D (x) id - id (x) beta_D)(r_can) = 0.
  CHECK((dbl.dbl.alpha * dbl.r_can - dbl.r_can * dbl.dbl.beta.transpose()).is_zero());

  // The adjoint of the double's operator under the pairing form swaps to
  // the partner operator.
  BilinearForm bd = pairing_form_symmetric(3);
  CHECK(adjoint_operator(dbl.dbl.alpha, bd) == dbl.dbl.beta);
}

TEST_CASE("double of the dim-1 zero bialgebra") {
  AsiBialgebraData zero{1, Cubic(1), Cubic(1), Matrix(1, 1), Matrix(1, 1)};
  DoubleBialgebra dbl = double_bialgebra(zero);
  CHECK(dbl.r_can == grid(2, {{0, 1, 1}}));
  CHECK(dbl.dbl.mul.is_zero());
  CHECK(dbl.dbl.comul.is_zero());
  CHECK(check_averaging_asi(dbl.dbl).ok());
}

TEST_CASE("phi intertwines the regular and coregular structures") {
  // Symmetric averaging Frobenius fixture: the double with its pairing form.
  DoubleBialgebra dbl = double_bialgebra(a3_bialgebra());
  AveragingAlgebra a{{6, dbl.dbl.mul}, dbl.dbl.alpha};
  BilinearForm form = pairing_form_symmetric(3);
  Matrix phi = form.phi();
  Matrix ahat = adjoint_operator(a.alpha, form);
  for (int i = 0; i < 6; ++i) {
    Matrix L = a.alg.mul.left_mat(i), R = a.alg.mul.right_mat(i);
    CHECK(phi * L == R.transpose() * phi);
    CHECK(phi * R == L.transpose() * phi);
  }
  CHECK(phi * a.alpha == ahat.transpose() * phi);
}

TEST_CASE("dualize twice negates both structure tables") {
  AsiBialgebraData b = bia2();
  AsiBialgebraData dual = dualize_bialgebra(b);
  CHECK(check_averaging_asi(dual).ok());
  AsiBialgebraData twice = dualize_bialgebra(dual);
  CHECK(twice.mul == -b.mul);
  CHECK(twice.comul == -b.comul);
  CHECK(twice.alpha == b.alpha);
  CHECK(twice.beta == b.beta);

  AsiBialgebraData zero{2, Cubic(2), Cubic(2), Matrix(2, 2), Matrix(2, 2)};
  AsiBialgebraData self = dualize_bialgebra(zero);
  CHECK(self.mul.is_zero());
  CHECK(self.comul.is_zero());
}

TEST_CASE("perm bialgebra induction gates") {
  // The coboundary fixture with beta = 0 passes both gates and induces the
  // trivial perm bialgebra.
  PermInductionResult res = induce_perm_bialgebra(c3_bialgebra());
  CHECK(res.gate.passed("COMPA-1"));
  CHECK(res.gate.passed("COMPA-2"));
  REQUIRE(res.bialgebra.has_value());
  CHECK(res.bialgebra->mul.is_zero());
  CHECK(res.bialgebra->comul.is_zero());
  CHECK(res.report->ok());

  // The commutative quadruple trips COMPA-1 at (e2, e1).
  PermInductionResult gate = induce_perm_bialgebra(bia2());
  CHECK(!gate.bialgebra.has_value());
  const AxiomResult* c1 = gate.gate.find("COMPA-1");
  REQUIRE(c1 != nullptr);
  CHECK(!c1->pass);
  CHECK(c1->witness->where == std::vector<int>{1, 0});
  // beta(e2 e1) = e2 against alpha(e2) e1 - e2 alpha(e1) = -e2.
  CHECK(c1->witness->lhs == Vec{Rat(0), Rat(1)});
  CHECK(c1->witness->rhs == Vec{Rat(0), Rat(-1)});

  // Non-cocommutative input is rejected outright (zero products keep the
  // rest of the suite trivially valid).
  AsiBialgebraData skewed{2, Cubic(2), cubic(2, {{0, 0, 1, 1}, {1, 1, 1, 1}}),
                          Matrix(2, 2), Matrix(2, 2)};
  CHECK_THROWS_AS((void)induce_perm_bialgebra(skewed), validation_error);
}

TEST_CASE("perm Manin triple of the trivial induced bialgebra") {
  PermInductionResult res = induce_perm_bialgebra(c3_bialgebra());
  PermManinTriple mt = perm_manin_triple(*res.bialgebra);
  CHECK(mt.report.ok());
  CHECK(mt.big.dim == 6);
  CHECK(mt.big.mul.is_zero());

  PermBialgebraData tiny{1, Cubic(1), Cubic(1)};
  PermManinTriple mt1 = perm_manin_triple(tiny);
  CHECK(mt1.big.dim == 2);
  CHECK(mt1.big.mul.is_zero());
  CHECK(mt1.report.ok());
}

TEST_CASE("every searched dim-2 perm bialgebra yields a passing Manin triple") {
  int found = 0;
  for_each_perm_bialgebra_dim2([&](const PermBialgebraData& pb) {
    PermManinTriple mt = perm_manin_triple(pb);
    CHECK(mt.report.ok());
    ++found;
  });
  CHECK(found > 1);  // at least the zero one and something nontrivial
}

TEST_CASE("induced perm matched pair commutes with the bowtie") {
  // Matched pair from the commutative, cocommutative fixture.
  MatchedPairData mp = matched_pair_from_bialgebra(c3_bialgebra());
  // Dual actions of a commutative algebra coincide pairwise.
  for (size_t i = 0; i < mp.lA.size(); ++i) CHECK(mp.lA[i] == mp.rA[i]);
  PermMatchedPair pmp = induce_perm_matched_pair(mp);
  PermAlgebra lhs = perm_bowtie(pmp);
  BowtieResult bw = bowtie(mp);
  PermAlgebra rhs = induce_perm(bw.alg, /*force=*/true);
  CHECK(lhs.mul == rhs.mul);
  CHECK(check_perm(lhs).ok());
}
