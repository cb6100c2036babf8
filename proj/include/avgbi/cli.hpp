#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "avgbi/document.hpp"

namespace avgbi {

// Exit codes: 0 all checks pass, 1 some axiom failed (report still rendered),
// 2 input/usage error.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

// One named suite on a parsed document ("check --as <kind>").
CheckReport run_kind_check(const DocumentBundle& doc, const std::string& kind,
                           const std::optional<Rat>& lambda);

// One construction on a parsed document; returns the output document.
DocumentBundle run_construct(const std::string& kind, const DocumentBundle& doc,
                             const std::optional<Rat>& lambda, bool force);

// Every suite applicable to the document's sections.
std::vector<CheckReport> run_all_applicable(const DocumentBundle& doc);

std::string render_report_text(const CheckReport& rep, const std::vector<std::string>& labels);
std::string render_report_json(const CheckReport& rep, const std::vector<std::string>& labels);

// Entry-level comparison of the shared sections of two documents.
std::string paper_diff_json(const DocumentBundle& constructed, const DocumentBundle& printed);

}  // namespace avgbi
