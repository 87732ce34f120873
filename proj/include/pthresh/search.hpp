#pragma once

#include <optional>

#include "pthresh/method.hpp"
#include "pthresh/scenarios.hpp"
#include "pthresh/witness.hpp"

namespace pthresh {

// Ballot groups get integer weights 1..weight_grid (rational weights with a
// common denominator, by homogeneity). For Tactic, weight_grid is instead the
// total number of unit votes V.
struct SearchSpec {
  int max_candidates = 4;
  int weight_grid = 3;
  int max_ballot_groups = 3;
  int max_ballot_length = 3;
  std::size_t branch_cap = 10000;
  long budget = 1'000'000;  // method runs
};

struct SearchResult {
  std::optional<Rational> best;  // largest W-fraction with a reachable bad outcome
  std::optional<Witness> witness;
  long evaluated = 0;
  long indeterminate = 0;  // profiles whose outcome set hit the branch cap
  bool budget_exhausted = false;
};

// Exhaustive over the grid; deterministic. A lower bound on the threshold only.
SearchResult search_lower_bound(const MethodId& m, ScenarioId s, int ell, int seats, const SearchSpec& spec);

}  // namespace pthresh
