#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "avgbi/cli.hpp"
#include "avgbi/search.hpp"

namespace py = pybind11;

namespace {

using avgbi::DocumentBundle;

DocumentBundle parse_or_fixture(const std::string& text_or_name) {
  if (avgbi::fixture_corpus().count(text_or_name)) return avgbi::load_fixture(text_or_name);
  return avgbi::parse_document(text_or_name);
}

std::string check(const std::string& doc_text, const std::string& kind,
                  const std::optional<std::string>& lambda) {
  DocumentBundle doc = parse_or_fixture(doc_text);
  std::optional<avgbi::Rat> w;
  if (lambda) {
    auto v = avgbi::parse_rational(*lambda);
    if (!v) throw avgbi::input_error("bad lambda '" + *lambda + "'");
    w = *v;
  }
  avgbi::CheckReport rep = avgbi::run_kind_check(doc, kind, w);
  return avgbi::render_report_json(rep, doc.basis);
}

std::string construct(const std::string& kind, const std::string& doc_text,
                      const std::optional<std::string>& lambda, bool force) {
  DocumentBundle doc = parse_or_fixture(doc_text);
  std::optional<avgbi::Rat> w;
  if (lambda) {
    auto v = avgbi::parse_rational(*lambda);
    if (!v) throw avgbi::input_error("bad lambda '" + *lambda + "'");
    w = *v;
  }
  return avgbi::emit_document(avgbi::run_construct(kind, doc, w, force));
}

std::vector<std::string> search(const std::string& doc_text, bool force, int partitions) {
  DocumentBundle tpl = parse_or_fixture(doc_text);
  std::vector<std::string> out;
  for (const auto& hit : avgbi::search_candidates(tpl, force, partitions))
    out.push_back(avgbi::emit_document(hit));
  return out;
}

std::string canonical_doc(const std::string& text) {
  return avgbi::emit_document(avgbi::parse_document(text));
}

std::string diff_docs(const std::string& constructed, const std::string& printed) {
  return avgbi::paper_diff_json(parse_or_fixture(constructed), parse_or_fixture(printed));
}

std::map<std::string, std::string> fixtures() { return avgbi::fixture_corpus(); }

int cli(const std::vector<std::string>& args) {
  return avgbi::run_cli(args, std::cout, std::cerr);
}

}  // namespace

PYBIND11_MODULE(_avgbi, m) {
  m.doc() = "exact-arithmetic verifier for averaging bialgebra structures";

  py::register_exception<avgbi::parse_error>(m, "ParseError");
  py::register_exception<avgbi::input_error>(m, "InputError");
  static py::exception<avgbi::validation_error> validation_exc(m, "ValidationError");
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const avgbi::validation_error& e) {
      std::string msg = std::string(e.what()) + "\n" +
                        avgbi::render_report_json(e.report, {});
      validation_exc(msg.c_str());
    }
  });

  m.def("check", &check, py::arg("doc"), py::arg("kind"), py::arg("lambda_") = py::none(),
        "Run one axiom suite; returns the machine report as a JSON string.");
  m.def("construct", &construct, py::arg("kind"), py::arg("doc"),
        py::arg("lambda_") = py::none(), py::arg("force") = false,
        "Build a derived structure; returns the canonical document.");
  m.def("search", &search, py::arg("template_doc"), py::arg("force") = false,
        py::arg("partitions") = 1, "Brute-force enumeration; returns found documents.");
  m.def("canonicalize", &canonical_doc, py::arg("doc"),
        "Parse and re-emit a document in canonical form.");
  m.def("paper_diff", &diff_docs, py::arg("constructed"), py::arg("printed"),
        "Entry-level diff of the shared sections of two documents.");
  m.def("fixtures", &fixtures, "The embedded fixture corpus.");
  m.def("cli", &cli, py::arg("args"), "Run the command-line interface in-process.");
}
