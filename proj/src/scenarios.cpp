#include "pthresh/scenarios.hpp"

#include <algorithm>
#include <set>

#include "pthresh/errors.hpp"

namespace pthresh {

std::string to_string(ScenarioId s) {
  switch (s) {
    case ScenarioId::Party: return "party";
    case ScenarioId::Same: return "same";
    case ScenarioId::Tactic: return "tactic";
    case ScenarioId::PJR: return "pjr";
    case ScenarioId::EJR: return "ejr";
    case ScenarioId::PSC: return "psc";
    case ScenarioId::WPSC: return "wpsc";
  }
  return "?";
}

ScenarioId parse_scenario(const std::string& text) {
  std::string t;
  for (char c : text) t += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  for (auto s : {ScenarioId::Party, ScenarioId::Same, ScenarioId::Tactic, ScenarioId::PJR, ScenarioId::EJR,
                 ScenarioId::PSC, ScenarioId::WPSC})
    if (to_string(s) == t) return s;
  throw ParseError("unknown scenario '" + text + "'");
}

namespace {

void check_kind(const ScenarioInstance& inst) {
  BallotKind k = inst.profile.kind();
  switch (inst.scenario) {
    case ScenarioId::PJR:
    case ScenarioId::EJR:
      if (k != BallotKind::Unordered) throw ValidationError(to_string(inst.scenario) + " needs unordered ballots");
      break;
    case ScenarioId::PSC:
    case ScenarioId::WPSC:
      if (k != BallotKind::Ordered) throw ValidationError(to_string(inst.scenario) + " needs ordered ballots");
      break;
    default: break;
  }
  if (inst.ell < 1 || inst.ell > inst.profile.seats()) throw DomainError("ell must lie in [1, S]");
}

std::vector<const Group*> w_groups(const Profile& p) {
  std::vector<const Group*> out;
  for (const auto& g : p.groups())
    if (g.in_w && g.weight.sign() > 0) out.push_back(&g);
  return out;
}

Committee sorted(std::vector<int> v) {
  std::sort(v.begin(), v.end());
  return v;
}

Committee top(const Group& g, std::size_t m) {
  return sorted(std::vector<int>(g.names.begin(), g.names.begin() + static_cast<long>(std::min(m, g.names.size()))));
}

std::size_t overlap(const Committee& a, const Committee& b) {
  std::size_t n = 0;
  for (int x : a)
    if (std::binary_search(b.begin(), b.end(), x)) ++n;
  return n;
}

}  // namespace

ScenarioInstance make_instance(Profile p, ScenarioId s, int ell, std::optional<Committee> target) {
  ScenarioInstance inst{std::move(p), s, {}, ell};
  check_kind(inst);
  if (target) {
    inst.target = sorted(*target);
    return inst;
  }
  auto ws = w_groups(inst.profile);
  if (ws.empty()) throw ValidationError("no ballot group is marked as W");
  switch (s) {
    case ScenarioId::Party:
    case ScenarioId::Same:
      inst.target = sorted(ws[0]->names);
      break;
    case ScenarioId::PJR:
    case ScenarioId::EJR: {
      Committee a = sorted(ws[0]->names);
      for (auto* g : ws) {
        Committee b = sorted(g->names), c;
        std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(c));
        a = c;
      }
      inst.target = a;
      break;
    }
    case ScenarioId::PSC: {
      std::size_t len = ws[0]->names.size();
      for (std::size_t m = static_cast<std::size_t>(ell); m <= len; ++m) {
        Committee a = top(*ws[0], m);
        bool ok = std::all_of(ws.begin(), ws.end(), [&](const Group* g) { return g->names.size() >= m && top(*g, m) == a; });
        if (ok) {
          inst.target = a;
          break;
        }
      }
      if (inst.target.empty()) inst.target = top(*ws[0], static_cast<std::size_t>(ell));
      break;
    }
    case ScenarioId::WPSC:
      inst.target = top(*ws[0], static_cast<std::size_t>(ell));
      break;
    case ScenarioId::Tactic: {
      std::set<int> u;
      for (auto* g : ws) u.insert(g->names.begin(), g->names.end());
      inst.target.assign(u.begin(), u.end());
      break;
    }
  }
  return inst;
}

bool is_instance(const ScenarioInstance& inst) {
  check_kind(inst);
  const Profile& p = inst.profile;
  auto ws = w_groups(p);
  if (ws.empty()) return false;
  const std::size_t ell = static_cast<std::size_t>(inst.ell);
  const Committee& A = inst.target;
  switch (inst.scenario) {
    case ScenarioId::Tactic: return true;
    case ScenarioId::Same:
      for (auto* g : ws)
        if (g->names != ws[0]->names) return false;
      if (p.kind() == BallotKind::Party) return true;
      return sorted(ws[0]->names) == A && A.size() >= ell;
    case ScenarioId::Party: {
      if (p.kind() == BallotKind::Party) {
        for (auto* g : ws)
          if (g->names != ws[0]->names) return false;
        return A == ws[0]->names;
      }
      // Lists must be identical within a party and disjoint across parties.
      std::set<std::vector<int>> lists;
      for (const auto& g : p.groups())
        if (g.weight.sign() > 0) lists.insert(sorted(g.names));
      std::set<int> seen;
      for (const auto& l : lists)
        for (int c : l)
          if (!seen.insert(c).second) return false;
      for (auto* g : ws)
        if (g->names != ws[0]->names) return false;
      return sorted(ws[0]->names) == A && A.size() >= ell;
    }
    case ScenarioId::PJR:
    case ScenarioId::EJR:
      if (A.size() < ell) return false;
      for (auto* g : ws)
        if (overlap(A, sorted(g->names)) != A.size()) return false;
      return true;
    case ScenarioId::PSC:
      if (A.size() < ell) return false;
      for (auto* g : ws)
        if (g->names.size() < A.size() || top(*g, A.size()) != A) return false;
      return true;
    case ScenarioId::WPSC:
      if (A.size() != ell) return false;
      for (auto* g : ws)
        if (g->names.size() < ell || top(*g, ell) != A) return false;
      return true;
  }
  return false;
}

bool is_good(const ScenarioInstance& inst, const Committee& committee) {
  check_kind(inst);
  const Profile& p = inst.profile;
  const std::size_t ell = static_cast<std::size_t>(inst.ell);
  Committee e = sorted(committee);
  if (p.kind() == BallotKind::Party) {
    // Seats of W's party.
    if (inst.target.size() != 1) throw ValidationError("party target must be a single party");
    return static_cast<std::size_t>(std::count(e.begin(), e.end(), inst.target[0])) >= ell;
  }
  auto ws = w_groups(p);
  switch (inst.scenario) {
    case ScenarioId::Party:
    case ScenarioId::Same:
    case ScenarioId::Tactic:
    case ScenarioId::PSC:
      return overlap(inst.target, e) >= ell;
    case ScenarioId::WPSC:
      return overlap(inst.target, e) == inst.target.size();
    case ScenarioId::PJR: {
      std::set<int> u;
      for (auto* g : ws) u.insert(g->names.begin(), g->names.end());
      return overlap(Committee(u.begin(), u.end()), e) >= ell;
    }
    case ScenarioId::EJR:
      for (auto* g : ws)
        if (overlap(sorted(g->names), e) >= ell) return true;
      return false;
  }
  return false;
}

bool is_bad_outcome_possible(const ScenarioInstance& inst, const OutcomeSet& outcomes) {
  if (outcomes.truncated) throw IndeterminateError("outcome set was truncated by the branch cap");
  for (const auto& c : outcomes.committees)
    if (!is_good(inst, c)) return true;
  return false;
}

Rational w_fraction(const ScenarioInstance& inst) { return inst.profile.w_total() / inst.profile.total(); }

}  // namespace pthresh
