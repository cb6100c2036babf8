#include "avgbi/search.hpp"

#include <algorithm>
#include <future>

namespace avgbi {

namespace {

constexpr long long kBudget = 10'000'000;

enum class SlotShape { Operator, Grid, GridAntisym, Cubic, Pmap };

struct SlotPlan {
  SlotShape shape;
  int rows = 0;  // module dim for Pmap
  long long count = 0;
};

SlotPlan plan_slots(const DocumentBundle& tpl, const SearchSpec& spec) {
  int n = tpl.dim();
  SlotPlan plan;
  if (spec.vary == "alpha" || spec.vary == "beta" || spec.vary == "rb") {
    plan.shape = SlotShape::Operator;
    plan.count = static_cast<long long>(n) * n;
  } else if (spec.vary == "r") {
    if (spec.predicate == "ybe-antisym") {
      plan.shape = SlotShape::GridAntisym;
      plan.count = static_cast<long long>(n) * (n - 1) / 2;
    } else {
      plan.shape = SlotShape::Grid;
      plan.count = static_cast<long long>(n) * n;
    }
  } else if (spec.vary == "mul" || spec.vary == "comul") {
    plan.shape = SlotShape::Cubic;
    plan.count = static_cast<long long>(n) * n * n;
  } else if (spec.vary == "P") {
    if (!tpl.actions) throw input_error("search over P needs an actions section");
    plan.shape = SlotShape::Pmap;
    plan.rows = static_cast<int>(tpl.actions->labels.size());
    plan.count = static_cast<long long>(plan.rows) * n;
  } else {
    throw input_error("search: cannot vary section '" + spec.vary + "'");
  }
  return plan;
}

// Assignment digits (most significant slot first) -> candidate bundle.
DocumentBundle materialize(const DocumentBundle& tpl, const SearchSpec& spec,
                           const SlotPlan& plan, const std::vector<int>& digits) {
  DocumentBundle cand = tpl;
  int n = tpl.dim();
  auto val = [&](long long slot) { return spec.entries[digits[slot]]; };
  switch (plan.shape) {
    case SlotShape::Operator: {
      Matrix m(n, n);
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) m.at(j, i) = val(static_cast<long long>(i) * n + j);
      if (spec.vary == "alpha") cand.alpha = m;
      else if (spec.vary == "beta") cand.beta = m;
      else cand.rb = m;
      break;
    }
    case SlotShape::Grid: {
      Matrix m(n, n);
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) m.at(i, j) = val(static_cast<long long>(i) * n + j);
      cand.r = m;
      break;
    }
    case SlotShape::GridAntisym: {
      Matrix m(n, n);
      long long slot = 0;
      for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
          m.at(i, j) = val(slot);
          m.at(j, i) = -m.at(i, j);
          ++slot;
        }
      cand.r = m;
      break;
    }
    case SlotShape::Cubic: {
      Cubic c(n);
      long long slot = 0;
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
          for (int k = 0; k < n; ++k) c.at(i, j, k) = val(slot++);
      if (spec.vary == "mul") cand.mul = c;
      else cand.comul = c;
      break;
    }
    case SlotShape::Pmap: {
      Matrix m(n, plan.rows);
      long long slot = 0;
      for (int i = 0; i < plan.rows; ++i)
        for (int j = 0; j < n; ++j) m.at(j, i) = val(slot++);
      cand.actions->P = m;
      break;
    }
  }
  return cand;
}

}  // namespace

bool search_predicate(const std::string& name, const DocumentBundle& cand) {
  if (name == "averaging-algebra") return check_averaging_algebra(doc_averaging(cand)).ok();
  if (name == "commutative-averaging") {
    return check_commutative(doc_algebra(cand)).ok() &&
           check_averaging_algebra(doc_averaging(cand)).ok();
  }
  if (name == "ybe" || name == "ybe-antisym")
    return check_avg_ybe(doc_averaging(cand), doc_beta(cand), doc_r(cand)).ok();
  if (name == "o-operator") return verify_o_operator(doc_o_operator(cand)).ok();
  if (name == "rb0-commuting") {
    if (!cand.rb) throw input_error("predicate rb0-commuting needs an 'rb' section");
    return check_rota_baxter(doc_averaging(cand), *cand.rb, Rat(0)).ok();
  }
  if (name == "perm") return check_perm(doc_perm(cand)).ok();
  if (name == "perm-bialgebra") return check_perm_bialgebra(doc_perm_bialgebra(cand)).ok();
  if (name == "averaging-asi") return check_averaging_asi(doc_asi(cand)).ok();
  throw input_error("unknown search predicate '" + name + "'");
}

std::vector<DocumentBundle> search_candidates(const DocumentBundle& tpl, bool force,
                                              int partitions) {
  if (!tpl.search) throw input_error("document lacks a 'search' section");
  const SearchSpec& spec = *tpl.search;
  SlotPlan plan = plan_slots(tpl, spec);
  long long base = static_cast<long long>(spec.entries.size());
  if (base == 0) return {};

  long long total = 1;
  for (long long s = 0; s < plan.count; ++s) {
    if (total > kBudget / std::max(base, 1LL) + 1) {
      total = kBudget + 1;
      break;
    }
    total *= base;
  }
  if (total > kBudget && !force)
    throw budget_error("search space exceeds the 1e7 budget; pass --force to override");

  auto run_range = [&](long long lo, long long hi) {
    std::vector<DocumentBundle> hits;
    std::vector<int> digits(static_cast<size_t>(plan.count), 0);
    for (long long idx = lo; idx < hi; ++idx) {
      long long rem = idx;
      for (long long s = plan.count - 1; s >= 0; --s) {
        digits[s] = static_cast<int>(rem % base);
        rem /= base;
      }
      DocumentBundle cand = materialize(tpl, spec, plan, digits);
      if (search_predicate(spec.predicate, cand)) hits.push_back(std::move(cand));
    }
    return hits;
  };

  partitions = std::max(partitions, 1);
  if (partitions == 1) return run_range(0, total);

  std::vector<std::future<std::vector<DocumentBundle>>> futures;
  long long chunk = (total + partitions - 1) / partitions;
  for (int p = 0; p < partitions; ++p) {
    long long lo = p * chunk, hi = std::min(total, lo + chunk);
    if (lo >= hi) break;
    futures.push_back(std::async(std::launch::async, run_range, lo, hi));
  }
  std::vector<DocumentBundle> merged;
  for (auto& f : futures) {
    auto part = f.get();
    merged.insert(merged.end(), std::make_move_iterator(part.begin()),
                  std::make_move_iterator(part.end()));
  }
  return merged;
}

}  // namespace avgbi
