#pragma once

#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "avgbi/cubic.hpp"
#include "avgbi/matrix.hpp"

namespace avgbi {

// First-failure evidence: the basis index tuple where the axiom broke and
// both sides' coordinates (flattened row-major for tensor-valued checks).
struct Witness {
  std::vector<int> where;
  Vec lhs;
  Vec rhs;
};

struct AxiomResult {
  std::string id;
  bool pass = true;
  std::optional<Witness> witness;
  // Reported for information only; never affects the verdict.
  bool informational = false;
};

class CheckReport {
 public:
  CheckReport() = default;
  explicit CheckReport(std::string kind) : kind_(std::move(kind)) {}

  void add(AxiomResult r) { axioms_.push_back(std::move(r)); }
  void merge(const CheckReport& other) {
    for (const auto& a : other.axioms_) axioms_.push_back(a);
  }

  bool ok() const {
    for (const auto& a : axioms_) {
      if (!a.pass && !a.informational) return false;
    }
    return true;
  }

  const AxiomResult* find(const std::string& id) const {
    for (const auto& a : axioms_) {
      if (a.id == id) return &a;
    }
    return nullptr;
  }

  bool passed(const std::string& id) const {
    const AxiomResult* a = find(id);
    return a != nullptr && a->pass;
  }

  const std::string& kind() const { return kind_; }
  void set_kind(std::string k) { kind_ = std::move(k); }
  const std::vector<AxiomResult>& axioms() const { return axioms_; }

 private:
  std::string kind_;
  std::vector<AxiomResult> axioms_;
};

// Thrown by constructions when eager input validation fails (unless forced).
struct validation_error : std::runtime_error {
  validation_error(const std::string& what, CheckReport rep)
      : std::runtime_error(what), report(std::move(rep)) {}
  CheckReport report;
};

// Evaluates eval over all index tuples [0,n)^arity; eval returns (lhs, rhs)
// coordinate vectors. Records the first tuple where they differ.
template <class F>
AxiomResult check_tuples(std::string id, int n, int arity, F&& eval) {
  AxiomResult res{std::move(id), true, std::nullopt};
  std::vector<int> idx(static_cast<size_t>(arity), 0);
  while (true) {
    auto [lhs, rhs] = eval(idx);
    if (lhs != rhs) {
      res.pass = false;
      res.witness = Witness{idx, std::move(lhs), std::move(rhs)};
      return res;
    }
    int pos = arity - 1;
    while (pos >= 0 && ++idx[pos] == n) idx[pos--] = 0;
    if (pos < 0) break;
  }
  return res;
}

template <class F>
AxiomResult check_tuples_matrix(std::string id, int n, int arity, F&& eval) {
  return check_tuples(std::move(id), n, arity, [&](const std::vector<int>& idx) {
    auto [l, r] = eval(idx);
    return std::pair<Vec, Vec>(l.flat(), r.flat());
  });
}

AxiomResult check_matrix_eq(std::string id, const Matrix& lhs, const Matrix& rhs);
AxiomResult check_zero_matrix(std::string id, const Matrix& t);
AxiomResult check_zero_cubic(std::string id, const Cubic& t);
AxiomResult axiom_bool(std::string id, bool pass, Witness w = {});

}  // namespace avgbi
