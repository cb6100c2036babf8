#include "avgbi/report.hpp"

namespace avgbi {

AxiomResult check_matrix_eq(std::string id, const Matrix& lhs, const Matrix& rhs) {
  AxiomResult res{std::move(id), true, std::nullopt};
  if (!(lhs == rhs)) {
    res.pass = false;
    res.witness = Witness{{}, lhs.flat(), rhs.flat()};
  }
  return res;
}

AxiomResult check_zero_matrix(std::string id, const Matrix& t) {
  AxiomResult res{std::move(id), true, std::nullopt};
  for (int i = 0; i < t.rows(); ++i) {
    for (int j = 0; j < t.cols(); ++j) {
      if (t.at(i, j) != 0) {
        res.pass = false;
        res.witness = Witness{{i, j}, {t.at(i, j)}, {Rat(0)}};
        return res;
      }
    }
  }
  return res;
}

AxiomResult check_zero_cubic(std::string id, const Cubic& t) {
  AxiomResult res{std::move(id), true, std::nullopt};
  if (auto pos = t.first_nonzero()) {
    res.pass = false;
    res.witness = Witness{{(*pos)[0], (*pos)[1], (*pos)[2]},
                          {t.at((*pos)[0], (*pos)[1], (*pos)[2])},
                          {Rat(0)}};
  }
  return res;
}

AxiomResult axiom_bool(std::string id, bool pass, Witness w) {
  AxiomResult res{std::move(id), pass, std::nullopt};
  if (!pass) res.witness = std::move(w);
  return res;
}

}  // namespace avgbi
