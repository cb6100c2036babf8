#include "avgbi/document.hpp"

#include <algorithm>
#include <set>

#include <json.hpp>

namespace avgbi {

using nlohmann::json;

int DocumentBundle::label_index(const std::string& label) const {
  for (size_t i = 0; i < basis.size(); ++i)
    if (basis[i] == label) return static_cast<int>(i);
  throw parse_error("unknown basis label '" + label + "'");
}

namespace {

int index_of(const std::vector<std::string>& labels, const json& j, const char* section) {
  if (!j.is_string()) throw parse_error(std::string(section) + ": basis labels must be strings");
  const std::string label = j.get<std::string>();
  for (size_t i = 0; i < labels.size(); ++i)
    if (labels[i] == label) return static_cast<int>(i);
  throw parse_error(std::string(section) + ": unknown basis label '" + label + "'");
}

Rat coeff_of(const json& j, const char* section) {
  if (j.is_number_integer()) return Rat(static_cast<long long>(j.get<long long>()));
  if (j.is_string()) {
    auto v = parse_rational(j.get<std::string>());
    if (!v) throw parse_error(std::string(section) + ": bad rational '" + j.get<std::string>() + "'");
    return *v;
  }
  throw parse_error(std::string(section) + ": coefficients must be integers or 'p/q' strings");
}

void expect_array(const json& j, const char* section) {
  if (!j.is_array()) throw parse_error(std::string(section) + ": expected an entry array");
}

// Entries [i, j, k, coeff] over (rows, rows, rows).
Cubic parse_cubic(const json& j, const std::vector<std::string>& labels, const char* section) {
  expect_array(j, section);
  Cubic c(static_cast<int>(labels.size()));
  std::set<std::array<int, 3>> seen;
  for (const auto& e : j) {
    if (!e.is_array() || e.size() != 4)
      throw parse_error(std::string(section) + ": entries must be [i, j, k, coeff]");
    int a = index_of(labels, e[0], section);
    int b = index_of(labels, e[1], section);
    int k = index_of(labels, e[2], section);
    if (!seen.insert({a, b, k}).second)
      throw parse_error(std::string(section) + ": duplicate entry for one slot");
    c.at(a, b, k) = coeff_of(e[3], section);
  }
  return c;
}

// Entries [in, out, coeff]: column `in` gets coeff at row `out`.
Matrix parse_operator(const json& j, const std::vector<std::string>& in_labels,
                      const std::vector<std::string>& out_labels, const char* section) {
  expect_array(j, section);
  Matrix m(static_cast<int>(out_labels.size()), static_cast<int>(in_labels.size()));
  std::set<std::pair<int, int>> seen;
  for (const auto& e : j) {
    if (!e.is_array() || e.size() != 3)
      throw parse_error(std::string(section) + ": entries must be [in, out, coeff]");
    int a = index_of(in_labels, e[0], section);
    int b = index_of(out_labels, e[1], section);
    if (!seen.insert({a, b}).second)
      throw parse_error(std::string(section) + ": duplicate entry for one slot");
    m.at(b, a) = coeff_of(e[2], section);
  }
  return m;
}

// Entries [i, j, coeff] with value at row i, column j (forms, r elements).
Matrix parse_grid(const json& j, const std::vector<std::string>& labels, const char* section) {
  expect_array(j, section);
  int n = static_cast<int>(labels.size());
  Matrix m(n, n);
  std::set<std::pair<int, int>> seen;
  for (const auto& e : j) {
    if (!e.is_array() || e.size() != 3)
      throw parse_error(std::string(section) + ": entries must be [i, j, coeff]");
    int a = index_of(labels, e[0], section);
    int b = index_of(labels, e[1], section);
    if (!seen.insert({a, b}).second)
      throw parse_error(std::string(section) + ": duplicate entry for one slot");
    m.at(a, b) = coeff_of(e[2], section);
  }
  return m;
}

// Entries [base, in, out, coeff]: one matrix per base basis vector.
std::vector<Matrix> parse_actions(const json& j, const std::vector<std::string>& base,
                                  const std::vector<std::string>& mod, const char* section) {
  expect_array(j, section);
  int md = static_cast<int>(mod.size());
  std::vector<Matrix> out(base.size(), Matrix(md, md));
  std::set<std::array<int, 3>> seen;
  for (const auto& e : j) {
    if (!e.is_array() || e.size() != 4)
      throw parse_error(std::string(section) + ": entries must be [base, in, out, coeff]");
    int a = index_of(base, e[0], section);
    int i = index_of(mod, e[1], section);
    int o = index_of(mod, e[2], section);
    if (!seen.insert({a, i, o}).second)
      throw parse_error(std::string(section) + ": duplicate entry for one slot");
    out[a].at(o, i) = coeff_of(e[3], section);
  }
  return out;
}

std::vector<std::string> parse_labels(const json& j, const char* section) {
  expect_array(j, section);
  std::vector<std::string> labels;
  std::set<std::string> seen;
  for (const auto& e : j) {
    if (!e.is_string()) throw parse_error(std::string(section) + ": labels must be strings");
    if (!seen.insert(e.get<std::string>()).second)
      throw parse_error(std::string(section) + ": duplicate basis label");
    labels.push_back(e.get<std::string>());
  }
  if (labels.empty()) throw parse_error(std::string(section) + ": empty basis");
  if (static_cast<int>(labels.size()) > kMaxDim)
    throw parse_error(std::string(section) + ": dimension exceeds the cap of 32");
  return labels;
}

json emit_coeff(const Rat& v) {
  if (denominator(v) == 1) {
    Int num = numerator(v);
    if (num >= std::numeric_limits<long long>::min() &&
        num <= std::numeric_limits<long long>::max())
      return json(static_cast<long long>(num));
  }
  return json(rational_str(v));
}

json emit_cubic(const Cubic& c, const std::vector<std::string>& labels) {
  json out = json::array();
  for (int i = 0; i < c.dim(); ++i)
    for (int j = 0; j < c.dim(); ++j)
      for (int k = 0; k < c.dim(); ++k)
        if (c.at(i, j, k) != 0)
          out.push_back(json::array({labels[i], labels[j], labels[k], emit_coeff(c.at(i, j, k))}));
  return out;
}

json emit_operator(const Matrix& m, const std::vector<std::string>& in_labels,
                   const std::vector<std::string>& out_labels) {
  json out = json::array();
  for (int a = 0; a < m.cols(); ++a)
    for (int b = 0; b < m.rows(); ++b)
      if (m.at(b, a) != 0)
        out.push_back(json::array({in_labels[a], out_labels[b], emit_coeff(m.at(b, a))}));
  return out;
}

json emit_grid(const Matrix& m, const std::vector<std::string>& labels) {
  json out = json::array();
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j)
      if (m.at(i, j) != 0)
        out.push_back(json::array({labels[i], labels[j], emit_coeff(m.at(i, j))}));
  return out;
}

json emit_actions(const std::vector<Matrix>& act, const std::vector<std::string>& base,
                  const std::vector<std::string>& mod) {
  json out = json::array();
  for (size_t a = 0; a < act.size(); ++a)
    for (int i = 0; i < act[a].cols(); ++i)
      for (int o = 0; o < act[a].rows(); ++o)
        if (act[a].at(o, i) != 0)
          out.push_back(json::array({base[a], mod[i], mod[o], emit_coeff(act[a].at(o, i))}));
  return out;
}

const std::set<std::string> kTopKeys = {
    "field", "basis",  "kind",   "mul",    "comul",  "perm",         "bracket",
    "succ",  "prec",   "alpha",  "beta",   "rb",     "iso",          "r",
    "form",  "lambda", "split",  "actions", "prelie", "matched_pair", "search"};

}  // namespace

DocumentBundle parse_document(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw parse_error(std::string("malformed JSON: ") + e.what());
  }
  if (!j.is_object()) throw parse_error("document must be a JSON object");
  for (const auto& [key, _] : j.items())
    if (!kTopKeys.count(key)) throw parse_error("unknown document key '" + key + "'");

  DocumentBundle d;
  if (j.contains("field")) {
    d.field = j["field"].get<std::string>();
    if (d.field != "Q") throw parse_error("unsupported field tag '" + d.field + "'");
  }
  if (!j.contains("basis")) throw parse_error("document needs a basis");
  d.basis = parse_labels(j["basis"], "basis");
  if (j.contains("kind")) d.kind = j["kind"].get<std::string>();
  auto op = [&](const char* key) -> std::optional<Matrix> {
    if (!j.contains(key)) return std::nullopt;
    return parse_operator(j[key], d.basis, d.basis, key);
  };
  if (j.contains("mul")) d.mul = parse_cubic(j["mul"], d.basis, "mul");
  if (j.contains("comul")) d.comul = parse_cubic(j["comul"], d.basis, "comul");
  if (j.contains("succ")) d.succ = parse_cubic(j["succ"], d.basis, "succ");
  if (j.contains("prec")) d.prec = parse_cubic(j["prec"], d.basis, "prec");
  if (j.contains("perm")) d.perm = parse_cubic(j["perm"], d.basis, "perm");
  if (j.contains("bracket")) d.bracket = parse_cubic(j["bracket"], d.basis, "bracket");
  d.alpha = op("alpha");
  d.beta = op("beta");
  d.rb = op("rb");
  d.iso = op("iso");
  if (j.contains("r")) d.r = parse_grid(j["r"], d.basis, "r");
  if (j.contains("form")) d.form = parse_grid(j["form"], d.basis, "form");
  if (j.contains("lambda")) d.lambda = coeff_of(j["lambda"], "lambda");
  if (j.contains("split")) {
    if (!j["split"].is_number_integer()) throw parse_error("split: expected an integer");
    d.split = j["split"].get<int>();
    if (*d.split <= 0 || 2 * *d.split != d.dim())
      throw parse_error("split: must be half the basis size");
  }
  if (j.contains("actions")) {
    const json& a = j["actions"];
    if (!a.is_object() || !a.contains("labels"))
      throw parse_error("actions: expected an object with module labels");
    for (const auto& [key, _] : a.items())
      if (key != "labels" && key != "lact" && key != "ract" && key != "beta" && key != "P")
        throw parse_error("actions: unknown key '" + key + "'");
    ActionsSection s;
    s.labels = parse_labels(a["labels"], "actions.labels");
    int md = static_cast<int>(s.labels.size());
    s.lact = a.contains("lact") ? parse_actions(a["lact"], d.basis, s.labels, "actions.lact")
                                : std::vector<Matrix>(d.basis.size(), Matrix(md, md));
    s.ract = a.contains("ract") ? parse_actions(a["ract"], d.basis, s.labels, "actions.ract")
                                : std::vector<Matrix>(d.basis.size(), Matrix(md, md));
    if (a.contains("beta")) s.beta = parse_operator(a["beta"], s.labels, s.labels, "actions.beta");
    if (a.contains("P")) s.P = parse_operator(a["P"], s.labels, d.basis, "actions.P");
    d.actions = std::move(s);
  }
  if (j.contains("prelie")) {
    const json& p = j["prelie"];
    if (!p.is_object() || !p.contains("labels") || !p.contains("circ") || !p.contains("omega"))
      throw parse_error("prelie: expected labels, circ and omega");
    PreLieSection s;
    s.labels = parse_labels(p["labels"], "prelie.labels");
    s.circ = parse_cubic(p["circ"], s.labels, "prelie.circ");
    s.omega = parse_grid(p["omega"], s.labels, "prelie.omega");
    d.prelie = std::move(s);
  }
  if (j.contains("matched_pair")) {
    const json& m = j["matched_pair"];
    if (!m.is_object() || !m.contains("labels_b"))
      throw parse_error("matched_pair: expected labels_b");
    MatchedPairSection s;
    s.labels_b = parse_labels(m["labels_b"], "matched_pair.labels_b");
    if (m.contains("b_is_dual")) s.b_is_dual = m["b_is_dual"].get<bool>();
    int mb = static_cast<int>(s.labels_b.size());
    s.mul_b = m.contains("mul_b") ? parse_cubic(m["mul_b"], s.labels_b, "matched_pair.mul_b")
                                  : Cubic(mb);
    s.alpha_b = m.contains("alpha_b")
                    ? parse_operator(m["alpha_b"], s.labels_b, s.labels_b, "matched_pair.alpha_b")
                    : Matrix(mb, mb);
    auto acts = [&](const char* key, const std::vector<std::string>& base,
                    const std::vector<std::string>& mod) {
      if (!m.contains(key)) return std::vector<Matrix>(base.size(), Matrix(mod.size(), mod.size()));
      return parse_actions(m[key], base, mod, key);
    };
    s.lA = acts("lA", d.basis, s.labels_b);
    s.rA = acts("rA", d.basis, s.labels_b);
    s.lB = acts("lB", s.labels_b, d.basis);
    s.rB = acts("rB", s.labels_b, d.basis);
    d.matched_pair = std::move(s);
  }
  if (j.contains("search")) {
    const json& s = j["search"];
    if (!s.is_object() || !s.contains("vary") || !s.contains("entries") || !s.contains("predicate"))
      throw parse_error("search: expected vary, entries and predicate");
    SearchSpec spec;
    spec.vary = s["vary"].get<std::string>();
    spec.predicate = s["predicate"].get<std::string>();
    for (const auto& e : s["entries"]) spec.entries.push_back(coeff_of(e, "search.entries"));
    if (spec.entries.empty() && !s["entries"].is_array())
      throw parse_error("search.entries: expected an array");
    d.search = std::move(spec);
  }
  return d;
}

std::string emit_document(const DocumentBundle& d) {
  json j;
  j["field"] = d.field;
  j["basis"] = d.basis;
  if (d.kind) j["kind"] = *d.kind;
  if (d.mul) j["mul"] = emit_cubic(*d.mul, d.basis);
  if (d.comul) j["comul"] = emit_cubic(*d.comul, d.basis);
  if (d.succ) j["succ"] = emit_cubic(*d.succ, d.basis);
  if (d.prec) j["prec"] = emit_cubic(*d.prec, d.basis);
  if (d.perm) j["perm"] = emit_cubic(*d.perm, d.basis);
  if (d.bracket) j["bracket"] = emit_cubic(*d.bracket, d.basis);
  if (d.alpha) j["alpha"] = emit_operator(*d.alpha, d.basis, d.basis);
  if (d.beta) j["beta"] = emit_operator(*d.beta, d.basis, d.basis);
  if (d.rb) j["rb"] = emit_operator(*d.rb, d.basis, d.basis);
  if (d.iso) j["iso"] = emit_operator(*d.iso, d.basis, d.basis);
  if (d.r) j["r"] = emit_grid(*d.r, d.basis);
  if (d.form) j["form"] = emit_grid(*d.form, d.basis);
  if (d.lambda) j["lambda"] = emit_coeff(*d.lambda);
  if (d.split) j["split"] = *d.split;
  if (d.actions) {
    json a;
    a["labels"] = d.actions->labels;
    a["lact"] = emit_actions(d.actions->lact, d.basis, d.actions->labels);
    a["ract"] = emit_actions(d.actions->ract, d.basis, d.actions->labels);
    if (d.actions->beta)
      a["beta"] = emit_operator(*d.actions->beta, d.actions->labels, d.actions->labels);
    if (d.actions->P) a["P"] = emit_operator(*d.actions->P, d.actions->labels, d.basis);
    j["actions"] = a;
  }
  if (d.prelie) {
    json p;
    p["labels"] = d.prelie->labels;
    p["circ"] = emit_cubic(d.prelie->circ, d.prelie->labels);
    p["omega"] = emit_grid(d.prelie->omega, d.prelie->labels);
    j["prelie"] = p;
  }
  if (d.matched_pair) {
    const auto& m = *d.matched_pair;
    json s;
    s["labels_b"] = m.labels_b;
    if (m.b_is_dual) s["b_is_dual"] = true;
    s["mul_b"] = emit_cubic(m.mul_b, m.labels_b);
    s["alpha_b"] = emit_operator(m.alpha_b, m.labels_b, m.labels_b);
    s["lA"] = emit_actions(m.lA, d.basis, m.labels_b);
    s["rA"] = emit_actions(m.rA, d.basis, m.labels_b);
    s["lB"] = emit_actions(m.lB, m.labels_b, d.basis);
    s["rB"] = emit_actions(m.rB, m.labels_b, d.basis);
    j["matched_pair"] = s;
  }
  if (d.search) {
    json s;
    s["vary"] = d.search->vary;
    s["predicate"] = d.search->predicate;
    json entries = json::array();
    for (const auto& e : d.search->entries) entries.push_back(emit_coeff(e));
    s["entries"] = entries;
    j["search"] = s;
  }
  return j.dump(2) + "\n";
}

DocumentBundle merge_documents(const std::vector<DocumentBundle>& docs) {
  if (docs.empty()) throw input_error("no documents to merge");
  DocumentBundle out = docs[0];
  for (size_t i = 1; i < docs.size(); ++i) {
    const DocumentBundle& d = docs[i];
    auto take = [&](auto& dst, const auto& src, const char* what) {
      if (!src) return;
      if (dst) throw input_error(std::string("merge: section '") + what + "' present twice");
      dst = src;
    };
    // A secondary document carrying only its own prelie/actions may use a
    // different basis; same-basis sections are merged positionally.
    take(out.mul, d.mul, "mul");
    take(out.comul, d.comul, "comul");
    take(out.succ, d.succ, "succ");
    take(out.prec, d.prec, "prec");
    take(out.perm, d.perm, "perm");
    take(out.bracket, d.bracket, "bracket");
    take(out.alpha, d.alpha, "alpha");
    take(out.beta, d.beta, "beta");
    take(out.rb, d.rb, "rb");
    take(out.iso, d.iso, "iso");
    take(out.r, d.r, "r");
    take(out.form, d.form, "form");
    take(out.lambda, d.lambda, "lambda");
    take(out.split, d.split, "split");
    take(out.actions, d.actions, "actions");
    take(out.prelie, d.prelie, "prelie");
    take(out.matched_pair, d.matched_pair, "matched_pair");
    take(out.search, d.search, "search");
  }
  return out;
}

// --- typed accessors ---------------------------------------------------------

namespace {
const Cubic& need_cubic(const std::optional<Cubic>& c, const char* what) {
  if (!c) throw input_error(std::string("document lacks a '") + what + "' section");
  return *c;
}
}  // namespace

Algebra doc_algebra(const DocumentBundle& d) {
  return Algebra{d.dim(), need_cubic(d.mul, "mul")};
}

AveragingAlgebra doc_averaging(const DocumentBundle& d) {
  if (!d.alpha) throw input_error("document lacks an 'alpha' section");
  return AveragingAlgebra{doc_algebra(d), *d.alpha};
}

LinOp doc_beta(const DocumentBundle& d) {
  if (d.beta) return *d.beta;
  return Matrix(d.dim(), d.dim());
}

PermAlgebra doc_perm(const DocumentBundle& d) {
  if (d.perm) return PermAlgebra{d.dim(), *d.perm};
  return PermAlgebra{d.dim(), need_cubic(d.mul, "perm (or mul)")};
}

DendriformData doc_dendriform(const DocumentBundle& d) {
  if (!d.succ || !d.prec) throw input_error("document lacks 'succ'/'prec' sections");
  std::optional<Matrix> alpha = d.alpha;
  return DendriformData{d.dim(), *d.succ, *d.prec, alpha};
}

PreLieQuadratic doc_prelie(const DocumentBundle& d) {
  if (!d.prelie) throw input_error("document lacks a 'prelie' section");
  return PreLieQuadratic{static_cast<int>(d.prelie->labels.size()), d.prelie->circ,
                         d.prelie->omega};
}

LieAlgebra doc_lie(const DocumentBundle& d) {
  return LieAlgebra{d.dim(), need_cubic(d.bracket, "bracket")};
}

AsiBialgebraData doc_asi(const DocumentBundle& d) {
  if (!d.alpha) throw input_error("document lacks an 'alpha' section");
  return AsiBialgebraData{d.dim(), need_cubic(d.mul, "mul"), need_cubic(d.comul, "comul"),
                          *d.alpha, doc_beta(d)};
}

PermBialgebraData doc_perm_bialgebra(const DocumentBundle& d) {
  Cubic mul = d.perm ? *d.perm : need_cubic(d.mul, "perm (or mul)");
  return PermBialgebraData{d.dim(), mul, need_cubic(d.comul, "comul")};
}

AveragingBimodule doc_bimodule(const DocumentBundle& d) {
  if (!d.actions) throw input_error("document lacks an 'actions' section");
  AveragingAlgebra base = doc_averaging(d);
  const ActionsSection& a = *d.actions;
  int md = static_cast<int>(a.labels.size());
  Matrix beta = a.beta ? *a.beta : Matrix(md, md);
  return AveragingBimodule{base, md, a.lact, a.ract, beta};
}

OOperatorData doc_o_operator(const DocumentBundle& d) {
  AveragingBimodule m = doc_bimodule(d);
  if (!d.actions->P) throw input_error("document lacks an 'actions.P' section");
  return OOperatorData{m, *d.actions->P};
}

MatchedPairData doc_matched_pair(const DocumentBundle& d) {
  if (!d.matched_pair) {
    // An averaging-asi document determines its canonical matched pair.
    return matched_pair_from_bialgebra(doc_asi(d), /*force=*/true);
  }
  const MatchedPairSection& s = *d.matched_pair;
  MatchedPairData mp;
  mp.algA = doc_averaging(d);
  mp.algB = AveragingAlgebra{{static_cast<int>(s.labels_b.size()), s.mul_b}, s.alpha_b};
  mp.lA = s.lA;
  mp.rA = s.rA;
  mp.lB = s.lB;
  mp.rB = s.rB;
  mp.b_is_dual_of_a = s.b_is_dual;
  return mp;
}

TwoTensor doc_r(const DocumentBundle& d) {
  if (!d.r) throw input_error("document lacks an 'r' section");
  return *d.r;
}

}  // namespace avgbi
