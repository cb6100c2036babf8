#pragma once

#include <functional>

#include "avgbi/document.hpp"

namespace avgbi {

struct budget_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Deterministic brute-force enumeration over the varied section's slots
// (lexicographic over slots, then entry order). Partitioning splits the
// candidate range into contiguous chunks evaluated independently; the merged
// output is identical for any partition count. Candidate spaces above 1e7
// are rejected unless forced.
std::vector<DocumentBundle> search_candidates(const DocumentBundle& tpl, bool force = false,
                                              int partitions = 1);

// The predicate a search template selects, applied to one candidate bundle.
bool search_predicate(const std::string& name, const DocumentBundle& candidate);

}  // namespace avgbi
