#include "avgbi/cli.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "avgbi/search.hpp"

namespace avgbi {

using nlohmann::json;

namespace {

const char kUsage[] =
    "usage: avgbi <command> [options]\n"
    "\n"
    "commands:\n"
    "  check <file...> --as <kind>      run one axiom suite, exit 0/1/2\n"
    "  construct <kind> <file...>       build a derived structure document\n"
    "  report <file...>                 run every applicable suite\n"
    "  search <template-file>           brute-force enumeration over a template\n"
    "\n"
    "options:\n"
    "  --as <kind>        suite to run (check)\n"
    "  -o <file>          write the constructed document to a file\n"
    "  --lambda <p/q>     weight for Rota-Baxter / factorizable commands\n"
    "  --beta-file <f>    take the beta operator from another document\n"
    "  --diff <fixture>   append a paper_diff section against a fixture\n"
    "  --force            skip eager input validation / search budget\n"
    "  --parts <n>        search worker partitions (output is identical)\n";

std::string star(const std::string& label) { return label + "*"; }

std::vector<std::string> doubled_labels(const std::vector<std::string>& basis) {
  std::vector<std::string> out = basis;
  for (const auto& l : basis) out.push_back(star(l));
  return out;
}

std::string where_str(const std::vector<int>& where, const std::vector<std::string>& labels) {
  std::string s = "(";
  for (size_t i = 0; i < where.size(); ++i) {
    if (i) s += ", ";
    if (where[i] >= 0 && where[i] < static_cast<int>(labels.size()))
      s += labels[where[i]];
    else
      s += "#" + std::to_string(where[i]);
  }
  return s + ")";
}

std::string vec_str(const Vec& v) {
  std::string s = "[";
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) s += ", ";
    s += rational_str(v[i]);
  }
  return s + "]";
}

json witness_json(const Witness& w, const std::vector<std::string>& labels) {
  json j;
  json where = json::array();
  for (int i : w.where) {
    if (i >= 0 && i < static_cast<int>(labels.size()))
      where.push_back(labels[i]);
    else
      where.push_back("#" + std::to_string(i));
  }
  j["where"] = where;
  json lhs = json::array(), rhs = json::array();
  for (const auto& x : w.lhs) lhs.push_back(rational_str(x));
  for (const auto& x : w.rhs) rhs.push_back(rational_str(x));
  j["lhs"] = lhs;
  j["rhs"] = rhs;
  return j;
}

}  // namespace

std::string render_report_text(const CheckReport& rep, const std::vector<std::string>& labels) {
  std::ostringstream os;
  os << "kind: " << rep.kind() << "\n";
  for (const auto& a : rep.axioms()) {
    if (a.informational)
      os << (a.pass ? "  info  " : "  info! ") << a.id;
    else
      os << (a.pass ? "  PASS  " : "  FAIL  ") << a.id;
    if (!a.pass && a.witness) {
      os << "  at " << where_str(a.witness->where, labels) << ": lhs = "
         << vec_str(a.witness->lhs) << ", rhs = " << vec_str(a.witness->rhs);
    }
    os << "\n";
  }
  os << "verdict: " << (rep.ok() ? "PASS" : "FAIL") << "\n";
  return os.str();
}

std::string render_report_json(const CheckReport& rep, const std::vector<std::string>& labels) {
  json j;
  j["kind"] = rep.kind();
  json axioms = json::array();
  for (const auto& a : rep.axioms()) {
    json e;
    e["id"] = a.id;
    e["pass"] = a.pass;
    if (a.informational) e["informational"] = true;
    if (a.witness) e["witness"] = witness_json(*a.witness, labels);
    axioms.push_back(e);
  }
  j["axioms"] = axioms;
  j["verdict"] = rep.ok() ? "pass" : "fail";
  return j.dump(2) + "\n";
}

CheckReport run_kind_check(const DocumentBundle& doc, const std::string& kind,
                           const std::optional<Rat>& lambda) {
  if (kind == "associative") return check_associative(doc_algebra(doc));
  if (kind == "commutative") return check_commutative(doc_algebra(doc));
  if (kind == "averaging-algebra") return check_averaging_algebra(doc_averaging(doc));
  if (kind == "perm") return check_perm(doc_perm(doc));
  if (kind == "dendriform") return check_dendriform(doc_dendriform(doc));
  if (kind == "averaging-dendriform") return check_averaging_dendriform(doc_dendriform(doc));
  if (kind == "pre-lie") return check_pre_lie(doc_prelie(doc).circ);
  if (kind == "quadratic-pre-lie") return check_quadratic_pre_lie(doc_prelie(doc));
  if (kind == "lie") return check_lie(doc_lie(doc));
  if (kind == "assoc-bimodule") {
    if (!doc.actions) throw input_error("document lacks an 'actions' section");
    return check_assoc_bimodule(doc_algebra(doc), static_cast<int>(doc.actions->labels.size()),
                                doc.actions->lact, doc.actions->ract);
  }
  if (kind == "averaging-bimodule") return check_averaging_bimodule(doc_bimodule(doc));
  if (kind == "perm-bimodule") {
    if (!doc.actions) throw input_error("document lacks an 'actions' section");
    PermBimodule m{doc_perm(doc), static_cast<int>(doc.actions->labels.size()),
                   doc.actions->lact, doc.actions->ract};
    return check_perm_bimodule(m);
  }
  if (kind == "coassoc") {
    if (!doc.comul) throw input_error("document lacks a 'comul' section");
    return check_coassoc(*doc.comul);
  }
  if (kind == "cocomm") {
    if (!doc.comul) throw input_error("document lacks a 'comul' section");
    return check_cocomm(*doc.comul);
  }
  if (kind == "averaging-coalgebra") {
    if (!doc.comul) throw input_error("document lacks a 'comul' section");
    return check_averaging_coalgebra(*doc.comul, doc_beta(doc));
  }
  if (kind == "asi") {
    if (!doc.comul) throw input_error("document lacks a 'comul' section");
    return check_asi(doc_algebra(doc), *doc.comul);
  }
  if (kind == "averaging-asi") return check_averaging_asi(doc_asi(doc));
  if (kind == "frobenius-form") {
    if (!doc.form) throw input_error("document lacks a 'form' section");
    return check_frobenius_form(doc_algebra(doc), BilinearForm{*doc.form});
  }
  if (kind == "matched-pair-averaging")
    return check_matched_pair_averaging(doc_matched_pair(doc));
  if (kind == "double-construction") {
    if (!doc.split) throw input_error("double-construction needs a 'split' field");
    std::optional<BilinearForm> form;
    if (doc.form) form = BilinearForm{*doc.form};
    return check_double_construction(doc_averaging(doc), *doc.split, form);
  }
  if (kind == "perm-bialgebra") return check_perm_bialgebra(doc_perm_bialgebra(doc));
  if (kind == "perm-manin-triple") {
    if (!doc.split) throw input_error("perm-manin-triple needs a 'split' field");
    Matrix form = doc.form ? *doc.form : pairing_form_antisymmetric(*doc.split);
    return check_perm_manin(doc_perm(doc), *doc.split, form);
  }
  if (kind == "ybe") return check_avg_ybe(doc_averaging(doc), doc_beta(doc), doc_r(doc));
  if (kind == "coboundary-conditions")
    return check_coboundary_conditions(doc_averaging(doc), doc_beta(doc), doc_r(doc));
  if (kind == "o-operator") return verify_o_operator(doc_o_operator(doc), lambda);
  if (kind == "rota-baxter") {
    if (!doc.rb) throw input_error("document lacks an 'rb' section");
    std::optional<Rat> w = lambda ? lambda : doc.lambda;
    if (!w) throw input_error("rota-baxter check needs --lambda");
    return check_rota_baxter(doc_averaging(doc), *doc.rb, *w);
  }
  if (kind == "rb-frobenius") {
    if (!doc.rb || !doc.form) throw input_error("rb-frobenius needs 'rb' and 'form' sections");
    std::optional<Rat> w = lambda ? lambda : doc.lambda;
    if (!w) throw input_error("rb-frobenius check needs --lambda");
    return check_rb_on_frobenius(doc_averaging(doc), BilinearForm{*doc.form}, *doc.rb, *w);
  }
  if (kind == "perm-ybe") return check_perm_ybe(doc_perm(doc), doc_r(doc));
  if (kind == "cybe") return check_cybe(doc_lie(doc), doc_r(doc));
  if (kind == "lr-invariant") return check_lr_invariant(doc_algebra(doc), doc_r(doc));
  if (kind == "classify") {
    Classification c = classify_r(doc_averaging(doc), doc_beta(doc), doc_r(doc));
    CheckReport rep = classification_report(c);
    std::string state = std::holds_alternative<FactorizableData>(c)   ? "factorizable"
                        : std::holds_alternative<QuasiTriangular>(c) ? "quasi-triangular"
                                                                     : "not-a-solution";
    rep.set_kind("classification: " + state);
    return rep;
  }
  throw input_error("unknown check kind '" + kind + "'");
}

std::vector<CheckReport> run_all_applicable(const DocumentBundle& doc) {
  std::vector<CheckReport> out;
  auto run = [&](const std::string& kind) { out.push_back(run_kind_check(doc, kind, doc.lambda)); };
  if (doc.mul) {
    run("associative");
    run("commutative");
  }
  if (doc.mul && doc.alpha) run("averaging-algebra");
  if (doc.perm || (doc.kind && *doc.kind == "perm" && doc.mul)) run("perm");
  if (doc.succ && doc.prec) run(doc.alpha ? "averaging-dendriform" : "dendriform");
  if (doc.prelie) run("quadratic-pre-lie");
  if (doc.bracket) run("lie");
  if (doc.comul) run(doc.beta ? "averaging-coalgebra" : "coassoc");
  if (doc.mul && doc.comul) run("asi");
  if (doc.mul && doc.comul && doc.alpha) run("averaging-asi");
  if (doc.mul && doc.form && !doc.split) run("frobenius-form");
  if (doc.mul && doc.alpha && doc.split) run("double-construction");
  if (doc.mul && doc.alpha && doc.r) {
    run("ybe");
    run("coboundary-conditions");
    run("classify");
  }
  if (doc.perm && doc.r) run("perm-ybe");
  if (doc.bracket && doc.r) run("cybe");
  if ((doc.perm || doc.mul) && doc.comul && doc.kind && *doc.kind == "perm-bialgebra")
    run("perm-bialgebra");
  if (doc.split && doc.perm && doc.form) run("perm-manin-triple");
  if (doc.actions && doc.mul) {
    run("assoc-bimodule");
    if (doc.alpha && doc.actions->beta) run("averaging-bimodule");
    if (doc.alpha && doc.actions->P) run("o-operator");
  }
  if (doc.rb && doc.mul && doc.alpha && doc.lambda) run("rota-baxter");
  return out;
}

namespace {

DocumentBundle bundle_for_algebra(const std::vector<std::string>& labels,
                                  const AveragingAlgebra& a, std::string kind) {
  DocumentBundle out;
  out.basis = labels;
  out.kind = std::move(kind);
  out.mul = a.alg.mul;
  out.alpha = a.alpha;
  return out;
}

std::vector<std::string> module_labels(const DocumentBundle& doc) {
  if (doc.actions) return doc.actions->labels;
  throw input_error("document lacks an 'actions' section");
}

std::vector<std::string> tensor_labels(const std::vector<std::string>& a,
                                       const std::vector<std::string>& b) {
  std::vector<std::string> out;
  for (const auto& x : a)
    for (const auto& y : b) out.push_back(x + "." + y);
  return out;
}

// Documents that carry r instead of an explicit comultiplication get the
// coboundary one.
AsiBialgebraData doc_asi_or_coboundary(const DocumentBundle& doc) {
  if (!doc.comul && doc.r) {
    DocumentBundle with = doc;
    with.comul = coboundary_comultiplication(doc_algebra(doc), *doc.r);
    return doc_asi(with);
  }
  return doc_asi(doc);
}

}  // namespace

DocumentBundle run_construct(const std::string& kind, const DocumentBundle& doc,
                             const std::optional<Rat>& lambda, bool force) {
  std::optional<Rat> w = lambda ? lambda : doc.lambda;
  if (kind == "semidirect") {
    AveragingBimodule m = doc_bimodule(doc);
    AveragingAlgebra big = semidirect_product(m.base, m, force);
    std::vector<std::string> labels = doc.basis;
    for (const auto& l : module_labels(doc)) labels.push_back(l);
    return bundle_for_algebra(labels, big, "averaging-algebra");
  }
  if (kind == "dual-bimodule") {
    AveragingBimodule dual = dual_averaging_bimodule(doc_bimodule(doc));
    DocumentBundle out = doc;
    out.actions->lact = dual.lact;
    out.actions->ract = dual.ract;
    out.actions->beta = dual.beta;
    out.actions->P.reset();
    return out;
  }
  if (kind == "matched-pair") {
    MatchedPairData mp = matched_pair_from_bialgebra(doc_asi_or_coboundary(doc), force);
    DocumentBundle out;
    out.basis = doc.basis;
    out.kind = "matched-pair";
    out.mul = mp.algA.alg.mul;
    out.alpha = mp.algA.alpha;
    MatchedPairSection s;
    for (const auto& l : doc.basis) s.labels_b.push_back(star(l));
    s.b_is_dual = true;
    s.mul_b = mp.algB.alg.mul;
    s.alpha_b = mp.algB.alpha;
    s.lA = mp.lA;
    s.rA = mp.rA;
    s.lB = mp.lB;
    s.rB = mp.rB;
    out.matched_pair = std::move(s);
    return out;
  }
  if (kind == "bowtie") {
    MatchedPairData mp = doc.matched_pair
                             ? doc_matched_pair(doc)
                             : matched_pair_from_bialgebra(doc_asi_or_coboundary(doc), force);
    BowtieResult bw = bowtie(mp, force);
    std::vector<std::string> labels = doc.basis;
    if (doc.matched_pair)
      for (const auto& l : doc.matched_pair->labels_b) labels.push_back(l);
    else
      labels = doubled_labels(doc.basis);
    DocumentBundle out = bundle_for_algebra(labels, bw.alg, "double-construction");
    if (bw.form_d) {
      out.form = bw.form_d->B;
      out.split = mp.algA.dim();
    }
    return out;
  }
  if (kind == "double") {
    DoubleBialgebra dbl = double_bialgebra(doc_asi_or_coboundary(doc), force);
    DocumentBundle out;
    out.basis = doubled_labels(doc.basis);
    out.kind = "averaging-asi";
    out.split = doc.dim();
    out.mul = dbl.dbl.mul;
    out.comul = dbl.dbl.comul;
    out.alpha = dbl.dbl.alpha;
    out.beta = dbl.dbl.beta;
    out.r = dbl.r_can;
    return out;
  }
  if (kind == "coboundary") {
    AveragingAlgebra a = doc_averaging(doc);
    DocumentBundle out = doc;
    out.comul = coboundary_comultiplication(a.alg, doc_r(doc));
    out.kind = "averaging-asi";
    return out;
  }
  if (kind == "induce-perm") {
    PermAlgebra p = induce_perm(doc_averaging(doc), force);
    DocumentBundle out = doc;
    out.perm = p.mul;
    out.kind = "perm";
    return out;
  }
  if (kind == "induce-perm-bialgebra") {
    PermInductionResult res = induce_perm_bialgebra(doc_asi_or_coboundary(doc), force);
    if (!res.bialgebra) {
      throw validation_error("induce-perm-bialgebra: COMPA gate fails", res.gate);
    }
    DocumentBundle out;
    out.basis = doc.basis;
    out.kind = "perm-bialgebra";
    out.mul = res.bialgebra->mul;
    out.comul = res.bialgebra->comul;
    return out;
  }
  if (kind == "manin-triple") {
    PermManinTriple mt = perm_manin_triple(doc_perm_bialgebra(doc), force);
    DocumentBundle out;
    out.basis = doubled_labels(doc.basis);
    out.kind = "perm-manin-triple";
    out.split = doc.dim();
    out.perm = mt.big.mul;
    out.form = mt.form;
    return out;
  }
  if (kind == "tensor-lie") {
    PermAlgebra p = doc_perm(doc);
    PreLieQuadratic q = doc_prelie(doc);
    LieAlgebra lie = tensor_lie(p, q, force);
    DocumentBundle out;
    out.basis = tensor_labels(doc.basis, doc.prelie->labels);
    out.kind = "lie";
    out.bracket = lie.bracket;
    return out;
  }
  if (kind == "lift-r") {
    PermAlgebra p = doc_perm(doc);
    PreLieQuadratic q = doc_prelie(doc);
    LieAlgebra lie = tensor_lie(p, q, force);
    DocumentBundle out;
    out.basis = tensor_labels(doc.basis, doc.prelie->labels);
    out.kind = "lie";
    out.bracket = lie.bracket;
    out.r = lift_r_to_lie(p, q, doc_r(doc));
    return out;
  }
  if (kind == "rb-from-factorizable") {
    if (!w) throw input_error("rb-from-factorizable needs --lambda");
    Classification c = classify_r(doc_averaging(doc), doc_beta(doc), doc_r(doc));
    auto* fact = std::get_if<FactorizableData>(&c);
    if (!fact)
      throw validation_error("rb-from-factorizable: r is not factorizable",
                             classification_report(c));
    RbFromFactorizable rb = rb_from_factorizable(*fact, *w);
    DocumentBundle out = doc;
    out.r.reset();
    out.form = rb.form.B;
    out.rb = rb.R;
    out.lambda = *w;
    out.kind = "rb-frobenius";
    return out;
  }
  if (kind == "factorizable-from-rb") {
    if (!w) throw input_error("factorizable-from-rb needs --lambda");
    if (!doc.rb || !doc.form) throw input_error("factorizable-from-rb needs 'rb' and 'form'");
    AveragingAlgebra a = doc_averaging(doc);
    TwoTensor r = factorizable_from_rb(a, BilinearForm{*doc.form}, *doc.rb, *w, force);
    DocumentBundle out = doc;
    out.r = r;
    out.beta = adjoint_operator(a.alpha, BilinearForm{*doc.form});
    out.lambda = *w;
    return out;
  }
  if (kind == "twisted") {
    if (!w) throw input_error("twisted needs --lambda");
    AveragingAlgebra a = doc_averaging(doc);
    Classification c = classify_r(a, doc_beta(doc), doc_r(doc));
    auto* fact = std::get_if<FactorizableData>(&c);
    if (!fact)
      throw validation_error("twisted: r is not factorizable", classification_report(c));
    TwistedBialgebra tw = twisted_bialgebra(a, doc_beta(doc), *fact, *w);
    DocumentBundle out;
    out.basis = doc.basis;
    out.kind = "averaging-asi";
    out.mul = tw.mulR;
    out.comul = tw.comulI;
    out.alpha = doc.alpha;
    out.beta = doc.beta;
    out.iso = tw.iso;
    out.lambda = *w;
    return out;
  }
  throw input_error("unknown construct kind '" + kind + "'");
}

std::string paper_diff_json(const DocumentBundle& constructed, const DocumentBundle& printed) {
  json diff;
  auto entry_map = [](const json& arr) {
    std::map<std::string, json> out;
    for (const auto& e : arr) {
      json key = json::array();
      for (size_t i = 0; i + 1 < e.size(); ++i) key.push_back(e[i]);
      out[key.dump()] = e[e.size() - 1];
    }
    return out;
  };
  json cj = json::parse(emit_document(constructed));
  json pj = json::parse(emit_document(printed));
  for (const char* section : {"mul", "comul", "perm", "bracket", "alpha", "beta", "r", "form"}) {
    if (!cj.contains(section) || !pj.contains(section)) continue;
    auto cm = entry_map(cj[section]);
    auto pm = entry_map(pj[section]);
    json matches = json::array(), mismatches = json::array(), missing = json::array(),
         extra = json::array();
    for (const auto& [key, val] : pm) {
      json slot = json::parse(key);
      auto it = cm.find(key);
      if (it == cm.end()) {
        slot.push_back(val);
        missing.push_back(slot);
      } else if (it->second == val) {
        slot.push_back(val);
        matches.push_back(slot);
      } else {
        json m;
        m["at"] = slot;
        m["printed"] = val;
        m["constructed"] = it->second;
        mismatches.push_back(m);
      }
    }
    for (const auto& [key, val] : cm) {
      if (!pm.count(key)) {
        json slot = json::parse(key);
        slot.push_back(val);
        extra.push_back(slot);
      }
    }
    json s;
    s["matches"] = matches;
    s["mismatches"] = mismatches;
    s["missing"] = missing;
    s["extra"] = extra;
    diff[section] = s;
  }
  return json{{"paper_diff", diff}}.dump(2) + "\n";
}

namespace {

DocumentBundle load_input(const std::string& arg) {
  if (!std::filesystem::exists(arg)) {
    if (fixture_corpus().count(arg)) return load_fixture(arg);
    throw input_error("no such file or fixture: " + arg);
  }
  std::ifstream in(arg);
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_document(ss.str());
}

struct Options {
  std::vector<std::string> files;
  std::string as_kind;
  std::string out_path;
  std::string beta_file;
  std::string diff_target;
  std::optional<Rat> lambda;
  bool force = false;
  int parts = 1;
};

Options parse_options(const std::vector<std::string>& args, size_t start) {
  Options opt;
  for (size_t i = start; i < args.size(); ++i) {
    const std::string& a = args[i];
    auto next = [&](const char* flag) -> const std::string& {
      if (i + 1 >= args.size()) throw input_error(std::string(flag) + " needs a value");
      return args[++i];
    };
    if (a == "--as") {
      opt.as_kind = next("--as");
    } else if (a == "-o") {
      opt.out_path = next("-o");
    } else if (a == "--beta-file") {
      opt.beta_file = next("--beta-file");
    } else if (a == "--diff") {
      opt.diff_target = next("--diff");
    } else if (a == "--lambda") {
      auto v = parse_rational(next("--lambda"));
      if (!v) throw input_error("--lambda: bad rational");
      opt.lambda = *v;
    } else if (a == "--force") {
      opt.force = true;
    } else if (a == "--parts") {
      opt.parts = std::stoi(next("--parts"));
    } else if (!a.empty() && a[0] == '-') {
      throw input_error("unknown flag '" + a + "'");
    } else {
      opt.files.push_back(a);
    }
  }
  return opt;
}

DocumentBundle load_merged(const Options& opt) {
  if (opt.files.empty()) throw input_error("no input file given");
  std::vector<DocumentBundle> docs;
  for (const auto& f : opt.files) docs.push_back(load_input(f));
  DocumentBundle doc = merge_documents(docs);
  if (!opt.beta_file.empty()) {
    DocumentBundle bf = load_input(opt.beta_file);
    if (bf.beta)
      doc.beta = bf.beta;
    else if (bf.alpha)
      doc.beta = bf.alpha;
    else
      throw input_error("--beta-file: document has neither beta nor alpha");
  }
  return doc;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  try {
    if (args.empty()) {
      err << kUsage;
      return 2;
    }
    const std::string& cmd = args[0];
    if (cmd == "check") {
      Options opt = parse_options(args, 1);
      if (opt.as_kind.empty()) throw input_error("check needs --as <kind>");
      DocumentBundle doc = load_merged(opt);
      CheckReport rep = run_kind_check(doc, opt.as_kind, opt.lambda);
      out << render_report_text(rep, doc.basis);
      out << "--- machine ---\n" << render_report_json(rep, doc.basis);
      return rep.ok() ? 0 : 1;
    }
    if (cmd == "report") {
      Options opt = parse_options(args, 1);
      DocumentBundle doc = load_merged(opt);
      std::vector<CheckReport> reps = run_all_applicable(doc);
      bool all = true;
      json machine = json::array();
      for (const auto& rep : reps) {
        out << render_report_text(rep, doc.basis) << "\n";
        machine.push_back(json::parse(render_report_json(rep, doc.basis)));
        all = all && rep.ok();
      }
      out << "--- machine ---\n"
          << json{{"reports", machine}, {"verdict", all ? "pass" : "fail"}}.dump(2) << "\n";
      return all ? 0 : 1;
    }
    if (cmd == "construct") {
      if (args.size() < 2) throw input_error("construct needs a kind");
      Options opt = parse_options(args, 2);
      DocumentBundle doc = load_merged(opt);
      DocumentBundle built = run_construct(args[1], doc, opt.lambda, opt.force);
      std::string text = emit_document(built);
      if (!opt.out_path.empty()) {
        std::ofstream of(opt.out_path);
        of << text;
      } else {
        out << text;
      }
      if (!opt.diff_target.empty()) {
        DocumentBundle printed = load_input(opt.diff_target);
        out << "--- paper_diff ---\n" << paper_diff_json(built, printed);
      }
      return 0;
    }
    if (cmd == "search") {
      Options opt = parse_options(args, 1);
      DocumentBundle tpl = load_merged(opt);
      std::vector<DocumentBundle> hits = search_candidates(tpl, opt.force, opt.parts);
      const std::string& vary = tpl.search->vary;
      long long index = 0;
      for (const auto& hit : hits) {
        json h = json::parse(emit_document(hit));
        json line;
        line["n"] = index++;
        line["vary"] = vary;
        if (vary == "P")
          line[vary] = h.contains("actions") && h["actions"].contains("P")
                           ? h["actions"]["P"]
                           : json::array();
        else
          line[vary] = h.contains(vary) ? h[vary] : json::array();
        out << line.dump() << "\n";
      }
      return 0;
    }
    err << kUsage;
    return 2;
  } catch (const validation_error& e) {
    err << "error: " << e.what() << "\n";
    err << render_report_text(e.report, {});
    return 1;
  } catch (const budget_error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace avgbi
