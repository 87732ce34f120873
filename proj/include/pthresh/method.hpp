#pragma once

#include <string>

#include "pthresh/count_options.hpp"
#include "pthresh/profile.hpp"
#include "pthresh/rational.hpp"
#include "pthresh/weights.hpp"

namespace pthresh {

enum class MethodKind {
  Div, Quota,                                                        // party ballots
  BV, AV, SNTV, LV, CV, CVq, PhragmenU, ThieleOpt, ThieleAdd, ThieleElim,  // unordered
  STV, PhragmenO, ThieleO, Borda                                     // ordered
};

struct MethodId {
  MethodKind kind = MethodKind::AV;
  Rational param;       // gamma for Div, delta for Quota and STV
  int limit = 0;        // L for LV
  WeightScheme weights; // ThieleOpt, ThieleAdd, Borda

  static MethodId div(Rational gamma) { return {MethodKind::Div, std::move(gamma), 0, {}}; }
  static MethodId quota(Rational delta) { return {MethodKind::Quota, std::move(delta), 0, {}}; }
  static MethodId stv(Rational delta) { return {MethodKind::STV, std::move(delta), 0, {}}; }
  static MethodId lv(int l) { return {MethodKind::LV, Rational(0), l, {}}; }
  static MethodId plain(MethodKind k) { return {k, Rational(0), 0, {}}; }
  static MethodId weighted(MethodKind k, WeightScheme w) { return {k, Rational(0), 0, std::move(w)}; }

  // CLI syntax: div:g dhondt stl adams quota:d hare droop bv av sntv lv:L cv cvq
  // phragmen thiele-opt[:w] thiele-add[:w] thiele-elim stv[:d] phragmen-o thiele-o borda[:w]
  static MethodId parse(const std::string& text);
  std::string str() const;

  BallotKind ballot_kind() const;
  // True if count() can run it (CV has thresholds but no engine).
  bool has_engine() const;
};

// Longest ballot the method accepts.
int max_ballot_size(const MethodId& m, int seats);

// Run the method; OutcomeSet of committees (party profiles: seat multisets).
OutcomeSet count(const MethodId& m, const Profile& p, const CountOptions& opt = {});

// Seat multiset for a party profile from a seat vector and back.
Committee seats_to_committee(const std::vector<int>& seats);
std::vector<int> committee_to_seats(const Committee& c, int parties);

}  // namespace pthresh
