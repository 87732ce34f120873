#include "pthresh/witness.hpp"

#include <functional>
#include <map>

#include "pthresh/errors.hpp"
#include "pthresh/profile_io.hpp"
#include "pthresh/sequences.hpp"
#include "pthresh/thresholds.hpp"

namespace pthresh {

namespace {

std::string nm(const std::string& prefix, int i) { return prefix + std::to_string(i); }

std::vector<std::string> names(const std::string& prefix, int from, int to) {
  std::vector<std::string> out;
  for (int i = from; i <= to; ++i) out.push_back(nm(prefix, i));
  return out;
}

// Cyclic window of `len` names starting at `start`.
std::vector<std::string> window(const std::vector<std::string>& pool, int start, int len) {
  std::vector<std::string> out;
  const int n = static_cast<int>(pool.size());
  for (int j = 0; j < len; ++j) out.push_back(pool[static_cast<std::size_t>((start + j) % n)]);
  return out;
}

std::vector<std::string> rotate_list(const std::vector<std::string>& pool, int start) {
  return window(pool, start, static_cast<int>(pool.size()));
}

std::vector<std::string> concat(std::vector<std::string> a, const std::vector<std::string>& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

Witness finish(BallotKind kind, int seats, const std::vector<NamedGroup>& groups, ScenarioId s, int ell,
               const std::string& token, std::optional<std::vector<std::string>> target = {}) {
  Profile p = normalize(Profile::from_named(kind, seats, groups));
  std::optional<Committee> a;
  if (target) a = p.committee_of(*target);
  Witness w{make_instance(std::move(p), s, ell, a), Rational(0), token};
  w.claimed_fraction = w_fraction(w.instance);
  return w;
}

void need(bool ok, const std::string& what) {
  if (!ok) throw DomainError(what);
}

long ceil_div(const Rational& r) { return r.ceil().to_long(); }

struct Args {
  const MethodId& m;
  ScenarioId s;
  int ell;
  int S;
  const Rational& eps;
};

Witness equal_parties(const Args& a) {
  need((a.S + 1) % a.ell == 0, "equal-parties needs ell to divide S+1");
  const int parties = (a.S + 1) / a.ell;
  const BallotKind kind = a.m.ballot_kind();
  std::vector<NamedGroup> groups;
  if (kind == BallotKind::Party) {
    need(a.s == ScenarioId::Party, "party ballots support only the party scenario");
    for (int i = 1; i <= parties; ++i) groups.push_back({Rational(1), {nm("P", i)}, i == 1});
    return finish(kind, a.S, groups, a.s, a.ell, "equal-parties");
  }
  const int cap = std::min(max_ballot_size(a.m, a.S), a.ell);
  const bool split = cap < a.ell || (a.s == ScenarioId::Tactic && kind == BallotKind::Ordered);
  need(!split || a.s == ScenarioId::Tactic, "ballots too short for a common list; use the tactic scenario");
  for (int i = 0; i < parties; ++i) {
    auto list = i == 0 ? names("A", 1, a.ell) : names("B" + std::to_string(i) + "_", 1, a.ell);
    if (!split) {
      groups.push_back({Rational(1), list, i == 0});
      continue;
    }
    for (int j = 0; j < a.ell; ++j) {
      auto b = kind == BallotKind::Ordered ? rotate_list(list, j) : window(list, j, cap);
      groups.push_back({Rational(1, a.ell), b, i == 0});
    }
  }
  return finish(kind, a.S, groups, a.s, a.ell, "equal-parties", names("A", 1, a.ell));
}

Witness divisor_party(const Args& a) {
  need(a.m.kind == MethodKind::Div && a.m.param.sign() > 0, "divisor-party needs a divisor method with gamma > 0");
  need(a.s == ScenarioId::Party, "divisor-party is a party construction");
  const Rational& g = a.m.param;
  std::vector<NamedGroup> groups{{Rational(a.ell - 1) + g, {"P0"}, true}};
  for (int i = 1; i <= a.S + 1 - a.ell; ++i) groups.push_back({g, {nm("Q", i)}, false});
  return finish(BallotKind::Party, a.S, groups, a.s, a.ell, "divisor-party");
}

Witness quota_party(const Args& a) {
  const bool stv = a.m.kind == MethodKind::STV;
  need(a.m.kind == MethodKind::Quota || stv, "quota-party needs a quota method or STV");
  const Rational& d = a.m.param;
  need(d.sign() >= 0 && d <= Rational(1), "quota-party needs delta in [0,1]");
  need(a.s == ScenarioId::Party || (stv && (a.s == ScenarioId::Same || a.s == ScenarioId::PSC ||
                                            a.s == ScenarioId::WPSC)),
       "quota-party is a party construction");
  const Rational t = (Rational(a.S - a.ell + 1) + d) / Rational(a.S - a.ell + 2);
  const Rational top = Rational(a.ell - 1) + t;
  std::vector<NamedGroup> groups;
  if (!stv) {
    groups.push_back({top, {"P0"}, true});
    for (int i = 1; i <= a.S + 1 - a.ell; ++i) groups.push_back({t, {nm("Q", i)}, false});
    return finish(BallotKind::Party, a.S, groups, a.s, a.ell, "quota-party");
  }
  const int len = a.s == ScenarioId::WPSC ? a.ell : a.S;
  groups.push_back({top, names("A", 1, len), true});
  for (int i = 1; i <= a.S + 1 - a.ell; ++i) groups.push_back({t, names("B" + std::to_string(i) + "_", 1, a.S), false});
  return finish(BallotKind::Ordered, a.S, groups, a.s, a.ell, "quota-party");
}

Witness ejr_block(const Args& a) {
  need(a.s == ScenarioId::EJR, "ejr-block is an EJR construction");
  int L;
  switch (a.m.kind) {
    case MethodKind::BV: L = a.S; break;
    case MethodKind::AV: L = a.S + a.ell; break;
    case MethodKind::LV: L = a.m.limit; break;
    default: throw DomainError("ejr-block needs block, approval or limited vote");
  }
  need(a.ell <= L, "ejr-block needs ell <= L");
  const int k = std::max(2 * a.ell - L - 1, 0);
  const int m = a.ell - k - 1;
  const int n3 = a.S - k;
  const int mp = std::min(n3, L);
  const Rational frac(mp, a.S + 1 - a.ell + mp);
  const auto A = names("A", 1, a.ell);
  const auto C = names("C", 1, n3);
  std::vector<NamedGroup> groups;
  for (int j = 0; j < n3; ++j) {
    groups.push_back({frac / Rational(n3), concat(A, window(C, j, m)), true});
    groups.push_back({(Rational(1) - frac) / Rational(n3), window(C, j, mp), false});
  }
  return finish(BallotKind::Unordered, a.S, groups, a.s, a.ell, "ejr-block", A);
}

Witness self_vote(const Args& a) {
  need(a.m.kind == MethodKind::CVq, "self-vote needs equal-and-even cumulative voting");
  need(a.s == ScenarioId::Same || a.s == ScenarioId::PJR || a.s == ScenarioId::EJR, "self-vote covers same/pjr/ejr");
  need(a.eps.sign() > 0 && a.eps < Rational(1), "epsilon must lie in (0,1)");
  // W has weight N - 1/2 spread over N names, just short of each other voter's 1.
  long n = std::max<long>(a.ell, ceil_div(Rational(a.S) / a.eps) + 1);
  need(n + a.S <= kMaxCandidates, "epsilon too small for 64 candidates");
  std::vector<NamedGroup> groups{{Rational(n) - Rational(1, 2), names("A", 1, static_cast<int>(n)), true}};
  for (int i = 1; i <= a.S; ++i) groups.push_back({Rational(1), {nm("B", i)}, false});
  return finish(BallotKind::Unordered, a.S, groups, a.s, a.ell, "self-vote");
}

Witness addition_lp(const Args& a) {
  need(a.m.kind == MethodKind::ThieleAdd, "addition-lp needs Thiele addition");
  need(a.s == ScenarioId::Same || a.s == ScenarioId::PJR || a.s == ScenarioId::EJR ||
           (a.s == ScenarioId::Tactic && a.ell == 1),
       "addition-lp covers same/pjr/ejr and tactic with ell = 1");
  const int n = a.S + 1 - a.ell;
  need(n <= kAlphaCap, "alpha LP too large");
  const Rational wl = a.m.weights.w(a.ell);
  need(wl.sign() > 0, "addition-lp needs w_ell > 0");
  const auto x = alpha_point(n, a.m.weights);
  const auto A = names("A", 1, a.ell);
  std::vector<NamedGroup> groups{{Rational(1), A, true}};
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i].is_zero()) continue;
    std::vector<std::string> b;
    const unsigned mask = static_cast<unsigned>(i + 1);
    for (int k = 0; k < n; ++k)
      if (mask >> k & 1u) b.push_back(nm("B", k + 1));
    groups.push_back({wl * x[i], b, false});
  }
  return finish(BallotKind::Unordered, a.S, groups, a.s, a.ell, "addition-lp", A);
}

Witness own_first(const Args& a) {
  need(a.m.kind == MethodKind::PhragmenO || a.m.kind == MethodKind::ThieleO, "own-first needs an ordered Phragmen or Thiele method");
  need(a.s == ScenarioId::PSC, "own-first is a PSC construction");
  need(a.eps.sign() > 0 && a.eps < Rational(1), "epsilon must lie in (0,1)");
  long n = std::max<long>(a.ell, ceil_div(Rational(2 * a.S) * (Rational(1) - a.eps) / a.eps));
  need(n + a.S <= kMaxCandidates, "epsilon too small for 64 candidates");
  const auto A = names("A", 1, static_cast<int>(n));
  std::vector<NamedGroup> groups;
  for (int i = 0; i < n; ++i) groups.push_back({Rational(1), rotate_list(A, i), true});
  for (int j = 1; j <= a.S; ++j) groups.push_back({Rational(2), {nm("B", j)}, false});
  return finish(BallotKind::Ordered, a.S, groups, a.s, a.ell, "own-first", A);
}

Witness elimination_chain(const Args& a) {
  need(a.m.kind == MethodKind::ThieleElim, "elimination-chain needs Thiele elimination");
  need((a.s == ScenarioId::PJR || a.s == ScenarioId::EJR) && a.ell == 1, "elimination-chain covers pjr/ejr with ell = 1");
  int m = 1;
  while ((m + 1) * (m + 1) <= a.S) ++m;
  const int n = std::max(1, std::min(8 / m, (kMaxCandidates - 1 - a.S) / m));
  std::vector<NamedGroup> groups;
  for (int i = 1; i <= m; ++i) {
    auto c = names("C" + std::to_string(i) + "_", 1, n);
    groups.push_back({Rational(n + 1), concat({"A"}, c), true});
    if (m > 1)
      for (const auto& name : c) groups.push_back({Rational(m - 1), {name}, false});
  }
  for (int k = 1; k <= a.S; ++k) groups.push_back({Rational(m + n), {nm("B", k)}, false});
  return finish(BallotKind::Unordered, a.S, groups, a.s, a.ell, "elimination-chain", std::vector<std::string>{"A"});
}

// b_i voters list X_i, X_{i+1}, ..., X_n; every X_k is elected with score 1.
void b_strategy(std::vector<NamedGroup>& groups, const std::string& prefix, int n, bool in_w) {
  auto list = names(prefix, 1, n);
  for (int i = 0; i < n; ++i)
    groups.push_back({seq_b(i + 1), std::vector<std::string>(list.begin() + i, list.end()), in_w});
}

Witness ordered_thiele(const Args& a) {
  need(a.m.kind == MethodKind::ThieleO, "ordered-thiele needs Thiele's ordered method");
  need(a.s == ScenarioId::Same || a.s == ScenarioId::Tactic, "ordered-thiele covers same and tactic");
  std::vector<NamedGroup> groups;
  if (a.s == ScenarioId::Same) groups.push_back({Rational(a.ell), names("A", 1, a.ell), true});
  else b_strategy(groups, "A", a.ell, true);
  b_strategy(groups, "B", a.S + 1 - a.ell, false);
  return finish(BallotKind::Ordered, a.S, groups, a.s, a.ell, "ordered-thiele", names("A", 1, a.ell));
}

struct Fixed {
  MethodKind kind;
  ScenarioId s;
  int ell, seats;
  const char* text;
};

const std::map<std::string, Fixed>& fixed_witnesses() {
  static const std::map<std::string, Fixed> table{
      {"brill-12",
       {MethodKind::PhragmenU, ScenarioId::EJR, 2, 12,
        "!seats 12\n!W 200 : {A B C1}\n!W 209 : {A B C2}\n"
        "600 : {C1 C2 C3 C4 C5 C6 C7 C8 C9 C10 C11 C12}\n"
        "500 : {C2 C3 C4 C5 C6 C7 C8 C9 C10 C11 C12}\n"
        "900 : {C3 C4 C5 C6 C7 C8 C9 C10 C11 C12}\n"}},
      {"tenow-1912",
       {MethodKind::ThieleAdd, ScenarioId::Same, 1, 3,
        "!seats 3\n1 : {A}\n9 : {A B}\n9 : {A C}\n9 : {B}\n9 : {C}\n!W 13 : {K L M}\n"}},
      {"tactic-o", {MethodKind::ThieleO, ScenarioId::Same, 1, 2, "!seats 2\n41 : [A B]\n20 : [B]\n!W 39 : [C D]\n"}},
      {"tho-two",
       {MethodKind::ThieleO, ScenarioId::Same, 2, 3, "!seats 3\n!W 55 : [A B C]\n30 : [X Y Z]\n15 : [Y Z X]\n"}},
  };
  return table;
}

using Builder = std::function<Witness(const Args&)>;

const std::map<std::string, Builder>& builders() {
  static const std::map<std::string, Builder> table{
      {"equal-parties", equal_parties},   {"divisor-party", divisor_party},
      {"quota-party", quota_party},       {"ejr-block", ejr_block},
      {"self-vote", self_vote},           {"addition-lp", addition_lp},
      {"own-first", own_first},           {"elimination-chain", elimination_chain},
      {"ordered-thiele", ordered_thiele},
  };
  return table;
}

}  // namespace

const std::vector<CatalogEntry>& witness_catalog() {
  static const std::vector<CatalogEntry> cat{
      {"equal-parties", "(S+1)/ell equal parties of ell candidates; split ballots when lists are capped"},
      {"divisor-party", "one party just short of ell seats against S+1-ell equal parties"},
      {"quota-party", "one party at ell-1+t quotas against S+1-ell parties at t quotas"},
      {"ejr-block", "W votes A plus a spread of extra names; all candidates tie"},
      {"self-vote", "W spreads thinly over many names; S others vote for one name each"},
      {"addition-lp", "others vote the optimal alpha LP point"},
      {"own-first", "W voters are candidates and rank their own name first; S others each backed by two voters"},
      {"elimination-chain", "A is eliminated first among tied candidates"},
      {"ordered-thiele", "b_i voters list X_i..X_n so each X is elected at score 1"},
      {"brill-12", "fixed 12-seat Phragmen profile, EJR with ell = 2"},
      {"tenow-1912", "fixed 3-seat Thiele addition split-vote profile"},
      {"tactic-o", "fixed 2-seat Thiele ordered split-vote profile"},
      {"tho-two", "fixed 3-seat Thiele ordered profile where a majority wins one seat"},
  };
  return cat;
}

Witness construct_witness(const std::string& token, const MethodId& m, ScenarioId s, int ell, int seats,
                          const Rational& epsilon) {
  if (auto it = fixed_witnesses().find(token); it != fixed_witnesses().end()) {
    const Fixed& f = it->second;
    need(m.kind == f.kind && s == f.s && ell == f.ell && seats == f.seats,
         "fixed witness '" + token + "' is for " + to_string(f.s) + " ell=" + std::to_string(f.ell) +
             " S=" + std::to_string(f.seats));
    Witness w{make_instance(parse_profile(f.text), s, ell), Rational(0), token};
    w.claimed_fraction = w_fraction(w.instance);
    return w;
  }
  auto it = builders().find(token);
  if (it == builders().end()) throw DomainError("unknown witness token '" + token + "'");
  need(ell >= 1 && ell <= seats, "need 1 <= ell <= S");
  need(supports(m, s), "scenario does not apply to the method's ballots");
  return it->second(Args{m, s, ell, seats, epsilon});
}

bool verify_witness(const Witness& w, const MethodId& m, const CountOptions& opt) {
  if (!is_instance(w.instance)) return false;
  if (w_fraction(w.instance) != w.claimed_fraction) return false;
  if (m.ballot_kind() != w.instance.profile.kind()) return false;
  return is_bad_outcome_possible(w.instance, count(m, w.instance.profile, opt));
}

}  // namespace pthresh
