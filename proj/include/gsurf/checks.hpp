#pragma once

#include <string>
#include <vector>

#include "gsurf/census.hpp"

namespace gsurf {

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;  // counts on pass, first counterexample on failure
};

/// Named invariant suite over one group, end to end: group axioms and class
/// bookkeeping, commuting-probability route agreement, complex counts, the
/// edge/orientation structure of the face adjacency, conjugation-orbit
/// invariants, sheet-count predictions, the global Euler/circle and
/// orbit-sum identities, per-component cell relations, divisibility, the
/// enumeration match, and the odd-order no-sphere consequence. Exact
/// arithmetic throughout; checks never mutate state.
std::vector<CheckResult> run_check_suite(const Group& g,
                                         const CensusOptions& opts = {});

bool all_pass(const std::vector<CheckResult>& results);

}  // namespace gsurf
