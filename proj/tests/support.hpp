#pragma once
#include <algorithm>
#include <map>
#include <numeric>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "pthresh/method.hpp"
#include "pthresh/profile.hpp"

namespace testkit {

using pthresh::BallotKind;
using pthresh::NamedGroup;
using pthresh::Profile;
using pthresh::Rational;

inline NamedGroup grp(Rational w, std::vector<std::string> names, bool in_w = false) {
  return NamedGroup{std::move(w), std::move(names), in_w};
}

inline Profile make(BallotKind k, int seats, std::vector<NamedGroup> gs, std::vector<std::string> extra = {}) {
  return Profile::from_named(k, seats, gs, extra);
}

using NamedOutcomes = std::set<std::vector<std::string>>;

inline NamedOutcomes named(const Profile& p, const pthresh::OutcomeSet& o) {
  NamedOutcomes out;
  for (const auto& c : o.committees) {
    auto n = p.names_of(c);
    std::sort(n.begin(), n.end());
    out.insert(n);
  }
  return out;
}

inline std::string cand(int i) { return "C" + std::to_string(i); }

inline int uniform(std::mt19937_64& rng, int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(rng);
}

// Small random profile of the given kind. Ballots are capped at `cap` names.
inline Profile random_profile(std::mt19937_64& rng, BallotKind kind, int cap = 64) {
  int n = uniform(rng, 2, 5);
  int seats = uniform(rng, 1, std::min(n - 1, 3));
  int groups = uniform(rng, 1, 4);
  std::vector<std::string> pool;
  for (int i = 0; i < n; ++i) pool.push_back(cand(i));
  std::vector<NamedGroup> gs;
  for (int g = 0; g < groups; ++g) {
    Rational w(uniform(rng, 1, 6), uniform(rng, 1, 3));
    std::vector<std::string> names;
    if (kind == BallotKind::Party) {
      names.push_back(pool[static_cast<std::size_t>(uniform(rng, 0, n - 1))]);
    } else {
      auto perm = pool;
      std::shuffle(perm.begin(), perm.end(), rng);
      int len = uniform(rng, 1, std::min(n, cap));
      names.assign(perm.begin(), perm.begin() + len);
    }
    gs.push_back(grp(w, names));
  }
  return Profile::from_named(kind, seats, gs, pool);
}

// Relabel candidates through a random bijection onto fresh names.
struct Relabel {
  Profile profile;
  std::map<std::string, std::string> map;
};

inline Relabel relabel(std::mt19937_64& rng, const Profile& p) {
  std::vector<std::string> fresh;
  for (int i = 0; i < p.num_candidates(); ++i) fresh.push_back("X" + std::to_string(i));
  std::shuffle(fresh.begin(), fresh.end(), rng);
  Relabel r;
  for (int i = 0; i < p.num_candidates(); ++i) r.map[p.name(i)] = fresh[static_cast<std::size_t>(i)];
  std::vector<NamedGroup> gs;
  for (const auto& g : p.groups()) {
    NamedGroup ng{g.weight, {}, g.in_w};
    for (int c : g.names) ng.names.push_back(r.map.at(p.name(c)));
    gs.push_back(ng);
  }
  r.profile = Profile::from_named(p.kind(), p.seats(), gs, fresh);
  return r;
}

inline NamedOutcomes mapped(const NamedOutcomes& o, const std::map<std::string, std::string>& m) {
  NamedOutcomes out;
  for (auto c : o) {
    for (auto& x : c) x = m.at(x);
    std::sort(c.begin(), c.end());
    out.insert(c);
  }
  return out;
}

// Disjoint solid party lists: party i has `len` candidates Pi_1.. and one ballot group.
struct PartyLists {
  std::vector<Rational> votes;
  int seats = 1;
  int len = 1;
};

inline PartyLists random_party_lists(std::mt19937_64& rng) {
  PartyLists pl;
  int parties = uniform(rng, 1, 4);
  pl.seats = uniform(rng, 1, 5);
  pl.len = pl.seats;
  for (int i = 0; i < parties; ++i) pl.votes.push_back(Rational(uniform(rng, 1, 12)));
  return pl;
}

inline std::string list_name(int party, int k) {
  return "P" + std::to_string(party) + "_" + std::to_string(k);
}

inline Profile list_profile(const PartyLists& pl, BallotKind kind) {
  std::vector<NamedGroup> gs;
  for (std::size_t i = 0; i < pl.votes.size(); ++i) {
    std::vector<std::string> names;
    for (int k = 1; k <= pl.len; ++k) names.push_back(list_name(static_cast<int>(i), k));
    gs.push_back(grp(pl.votes[i], names));
  }
  return Profile::from_named(kind, pl.seats, gs);
}

// Seat vectors implied by committees of a list profile. With `prefix`, a
// committee not taking a prefix of every list is recorded as an empty vector.
inline std::set<std::vector<int>> list_seats(const Profile& p, const pthresh::OutcomeSet& o, int parties,
                                             bool prefix_only = false) {
  std::set<std::vector<int>> out;
  for (const auto& c : o.committees) {
    std::vector<int> seats(static_cast<std::size_t>(parties), 0);
    std::set<std::string> names;
    for (const auto& n : p.names_of(c)) names.insert(n);
    for (const auto& n : names) {
      auto us = n.find('_');
      seats[static_cast<std::size_t>(std::stoi(n.substr(1, us - 1)))]++;
    }
    bool prefix = true;
    for (int i = 0; i < parties; ++i)
      for (int k = 1; k <= seats[static_cast<std::size_t>(i)]; ++k)
        if (!names.count(list_name(i, k))) prefix = false;
    out.insert(prefix || !prefix_only ? seats : std::vector<int>{});
  }
  return out;
}

inline std::set<std::vector<int>> as_set(const std::vector<std::vector<int>>& v) {
  return {v.begin(), v.end()};
}

}  // namespace testkit
