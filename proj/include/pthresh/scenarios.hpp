#pragma once

#include <optional>
#include <string>
#include <vector>

#include "pthresh/profile.hpp"

namespace pthresh {

enum class ScenarioId { Party, Same, Tactic, PJR, EJR, PSC, WPSC };

std::string to_string(ScenarioId s);
ScenarioId parse_scenario(const std::string& text);

struct ScenarioInstance {
  Profile profile;  // W is the set of groups with in_w
  ScenarioId scenario = ScenarioId::Same;
  Committee target;  // the candidate set A (party profiles: W's party)
  int ell = 1;
};

// Build an instance, deriving A from the W ballots when `target` is empty:
// Party/Same: W's common list; PJR/EJR: intersection of W ballots;
// PSC: smallest common top-m set with m >= ell; WPSC: top-ell set;
// Tactic: union of W's names.
ScenarioInstance make_instance(Profile p, ScenarioId s, int ell, std::optional<Committee> target = {});

bool is_instance(const ScenarioInstance& inst);
bool is_good(const ScenarioInstance& inst, const Committee& committee);
// Throws IndeterminateError when the outcome set is truncated.
bool is_bad_outcome_possible(const ScenarioInstance& inst, const OutcomeSet& outcomes);
// Fraction W / V.
Rational w_fraction(const ScenarioInstance& inst);

}  // namespace pthresh
