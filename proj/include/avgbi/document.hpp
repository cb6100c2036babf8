#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "avgbi/factorizable.hpp"

namespace avgbi {

struct parse_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct input_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ActionsSection {
  std::vector<std::string> labels;  // module basis
  std::vector<Matrix> lact, ract;   // per base basis vector
  std::optional<Matrix> beta;       // operator on M
  std::optional<Matrix> P;          // map M -> A (n x m)
};

struct PreLieSection {
  std::vector<std::string> labels;
  Cubic circ;
  Matrix omega;
};

struct MatchedPairSection {
  std::vector<std::string> labels_b;
  bool b_is_dual = false;  // B is the coordinate dual of the primal basis
  Cubic mul_b;
  Matrix alpha_b;
  std::vector<Matrix> lA, rA;  // A acting on B
  std::vector<Matrix> lB, rB;  // B acting on A
};

struct SearchSpec {
  std::string vary;       // alpha | beta | rb | r | mul | comul | P
  std::vector<Rat> entries;
  std::string predicate;
};

// Parsed file contents: named structures, operators, forms, r-elements and
// action tensors over one basis registry. Omitted entries are zero.
struct DocumentBundle {
  std::string field = "Q";
  std::vector<std::string> basis;
  std::optional<std::string> kind;
  std::optional<Cubic> mul, comul, perm, bracket, succ, prec;
  std::optional<Matrix> alpha, beta, rb, iso, r, form;
  std::optional<Rat> lambda;
  std::optional<int> split;
  std::optional<ActionsSection> actions;
  std::optional<PreLieSection> prelie;
  std::optional<MatchedPairSection> matched_pair;
  std::optional<SearchSpec> search;

  int dim() const { return static_cast<int>(basis.size()); }
  int label_index(const std::string& label) const;
};

DocumentBundle parse_document(const std::string& text);
std::string emit_document(const DocumentBundle& doc);

// Later bundles fill sections the first one lacks; a section present in two
// inputs is an error.
DocumentBundle merge_documents(const std::vector<DocumentBundle>& docs);

// Embedded corpus (FIX-A3, FIX-C3, ...).
const std::map<std::string, std::string>& fixture_corpus();
DocumentBundle load_fixture(const std::string& name);

// --- typed accessors (throw input_error when a section is missing) ----------

Algebra doc_algebra(const DocumentBundle& d);
AveragingAlgebra doc_averaging(const DocumentBundle& d);
LinOp doc_beta(const DocumentBundle& d);        // explicit beta; zero map if absent
PermAlgebra doc_perm(const DocumentBundle& d);  // "perm" section, else mul
DendriformData doc_dendriform(const DocumentBundle& d);
PreLieQuadratic doc_prelie(const DocumentBundle& d);
LieAlgebra doc_lie(const DocumentBundle& d);
AsiBialgebraData doc_asi(const DocumentBundle& d);
PermBialgebraData doc_perm_bialgebra(const DocumentBundle& d);
AveragingBimodule doc_bimodule(const DocumentBundle& d);
OOperatorData doc_o_operator(const DocumentBundle& d);
MatchedPairData doc_matched_pair(const DocumentBundle& d);
TwoTensor doc_r(const DocumentBundle& d);

}  // namespace avgbi
