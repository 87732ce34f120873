#pragma once

#include <vector>

#include "pthresh/count_options.hpp"
#include "pthresh/profile.hpp"
#include "pthresh/weights.hpp"

namespace pthresh {

struct ApprovalRule {
  enum class Kind { BlockVote, Approval, Sntv, Limited, EqualEvenCumulative };
  Kind kind = Kind::Approval;
  int limit = 0;  // only for Limited

  static ApprovalRule block() { return {Kind::BlockVote, 0}; }
  static ApprovalRule approval() { return {Kind::Approval, 0}; }
  static ApprovalRule sntv() { return {Kind::Sntv, 0}; }
  static ApprovalRule limited(int l) { return {Kind::Limited, l}; }
  static ApprovalRule cumulative() { return {Kind::EqualEvenCumulative, 0}; }
};

// Elect the S highest scorers; every way of breaking the boundary tie is returned.
OutcomeSet score_family_count(const ApprovalRule& rule, const Profile& p, const CountOptions& opt = {});

struct LoadState {
  std::vector<Rational> loads;        // per ballot group
  std::vector<Rational> max_history;  // max load after each election
  int unsupported = 0;                // elections of candidates nobody approved
};

struct PhragmenFinal {
  Committee committee;
  LoadState state;
};

struct PhragmenResult {
  OutcomeSet outcomes;
  std::vector<PhragmenFinal> finals;  // one per distinct final load state
};

PhragmenResult phragmen_unordered(const Profile& p, const CountOptions& opt = {});

// All committees maximising total satisfaction sum_g v_g psi(|g & E|).
OutcomeSet thiele_optimize(const WeightScheme& w, const Profile& p, const CountOptions& opt = {});

struct ThieleTrace {
  OutcomeSet outcomes;
  // False if some branch elected a candidate with a higher score than the previous one.
  bool scores_nonincreasing = true;
};

ThieleTrace thiele_addition_trace(const WeightScheme& w, const Profile& p, const CountOptions& opt = {});
OutcomeSet thiele_addition(const WeightScheme& w, const Profile& p, const CountOptions& opt = {});

// Harmonic elimination: drop a minimum scorer until S candidates remain.
OutcomeSet thiele_elimination(const Profile& p, const CountOptions& opt = {});

// Shared by scoring engines: all ways to pick the top `seats` by score.
OutcomeSet top_scores(const std::vector<Rational>& scores, int seats, std::size_t branch_cap);

}  // namespace pthresh
