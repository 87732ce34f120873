#include "pthresh/profile.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "pthresh/errors.hpp"

namespace pthresh {

std::string to_string(BallotKind k) {
  switch (k) {
    case BallotKind::Party: return "party";
    case BallotKind::Unordered: return "unordered";
    case BallotKind::Ordered: return "ordered";
  }
  return "?";
}

bool OutcomeSet::contains(const Committee& c) const {
  return std::binary_search(committees.begin(), committees.end(), c);
}

void OutcomeSet::canonicalize() {
  for (auto& c : committees) std::sort(c.begin(), c.end());
  std::sort(committees.begin(), committees.end());
  committees.erase(std::unique(committees.begin(), committees.end()), committees.end());
}

bool valid_candidate_id(const std::string& id) {
  if (id.empty()) return false;
  for (char ch : id) {
    if (static_cast<unsigned char>(ch) <= ' ') return false;
    if (std::string_view("{}[]:#!,|").find(ch) != std::string_view::npos) return false;
  }
  return true;
}

Profile::Profile(BallotKind kind, int seats, std::vector<std::string> candidates, std::vector<Group> groups)
    : kind_(kind), seats_(seats) {
  if (seats < 1) throw ValidationError("seats must be positive");
  std::vector<int> order(candidates.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) { return candidates[a] < candidates[b]; });
  std::vector<int> remap(candidates.size());
  for (std::size_t pos = 0; pos < order.size(); ++pos) {
    const auto& id = candidates[static_cast<std::size_t>(order[pos])];
    if (!valid_candidate_id(id)) throw ValidationError("invalid candidate id '" + id + "'");
    if (pos > 0 && id == candidates_.back()) throw ValidationError("duplicate candidate '" + id + "'");
    remap[static_cast<std::size_t>(order[pos])] = static_cast<int>(pos);
    candidates_.push_back(id);
  }
  if (kind != BallotKind::Party && num_candidates() < seats)
    throw ValidationError("universe has fewer candidates than seats");
  for (std::size_t gi = 0; gi < groups.size(); ++gi) {
    Group g = std::move(groups[gi]);
    std::string where = "ballot group " + std::to_string(gi + 1);
    if (g.weight.sign() < 0) throw ValidationError(where + " has negative weight");
    if (g.names.empty()) throw ValidationError(where + " is empty");
    if (kind == BallotKind::Party && g.names.size() != 1)
      throw ValidationError(where + " must name exactly one party");
    for (int& n : g.names) {
      if (n < 0 || n >= num_candidates()) throw ValidationError(where + " names an unknown candidate");
      n = remap[static_cast<std::size_t>(n)];
    }
    std::vector<int> sorted = g.names;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
      throw ValidationError(where + " repeats a candidate");
    if (kind == BallotKind::Unordered) g.names = sorted;
    groups_.push_back(std::move(g));
  }
}

Profile Profile::from_named(BallotKind kind, int seats, const std::vector<NamedGroup>& groups,
                            const std::vector<std::string>& extra_candidates) {
  std::set<std::string> universe(extra_candidates.begin(), extra_candidates.end());
  for (const auto& g : groups) universe.insert(g.names.begin(), g.names.end());
  std::vector<std::string> names(universe.begin(), universe.end());
  std::map<std::string, int> idx;
  for (std::size_t i = 0; i < names.size(); ++i) idx[names[i]] = static_cast<int>(i);
  std::vector<Group> gs;
  for (const auto& g : groups) {
    Group out;
    out.weight = g.weight;
    out.in_w = g.in_w;
    for (const auto& n : g.names) out.names.push_back(idx.at(n));
    gs.push_back(std::move(out));
  }
  return Profile(kind, seats, std::move(names), std::move(gs));
}

int Profile::index_of(const std::string& name) const {
  auto it = std::lower_bound(candidates_.begin(), candidates_.end(), name);
  if (it == candidates_.end() || *it != name) return -1;
  return static_cast<int>(it - candidates_.begin());
}

Rational Profile::total() const {
  Rational v;
  for (const auto& g : groups_) v += g.weight;
  return v;
}

Rational Profile::w_total() const {
  Rational v;
  for (const auto& g : groups_)
    if (g.in_w) v += g.weight;
  return v;
}

bool Profile::has_w() const {
  return std::any_of(groups_.begin(), groups_.end(), [](const Group& g) { return g.in_w; });
}

std::vector<std::string> Profile::names_of(const Committee& c) const {
  std::vector<std::string> out;
  for (int i : c) out.push_back(name(i));
  return out;
}

Committee Profile::committee_of(const std::vector<std::string>& names) const {
  Committee c;
  for (const auto& n : names) {
    int i = index_of(n);
    if (i < 0) throw ValidationError("unknown candidate '" + n + "'");
    c.push_back(i);
  }
  std::sort(c.begin(), c.end());
  return c;
}

Profile Profile::with_seats(int seats) const {
  Profile p = *this;
  if (seats < 1) throw ValidationError("seats must be positive");
  if (kind_ != BallotKind::Party && num_candidates() < seats)
    throw ValidationError("universe has fewer candidates than seats");
  p.seats_ = seats;
  return p;
}

Profile Profile::with_w(const std::vector<bool>& flags) const {
  if (flags.size() != groups_.size()) throw ValidationError("W flag count does not match groups");
  Profile p = *this;
  for (std::size_t i = 0; i < flags.size(); ++i) p.groups_[i].in_w = flags[i];
  return p;
}

Profile normalize(const Profile& p) {
  std::map<std::pair<std::vector<int>, bool>, Rational> merged;
  for (const auto& g : p.groups()) {
    if (g.weight.is_zero()) continue;
    merged[{g.names, g.in_w}] += g.weight;
  }
  std::vector<Group> gs;
  for (auto& [key, w] : merged) gs.push_back(Group{key.first, w, key.second});
  Profile out(p.kind(), p.seats(), p.candidates(), std::move(gs));
  if (out.total().is_zero()) throw ValidationError("profile has zero total weight");
  return out;
}

Profile scale(const Profile& p, const Rational& factor) {
  if (factor.sign() <= 0) throw DomainError("scale factor must be positive");
  std::vector<Group> gs = p.groups();
  for (auto& g : gs) g.weight *= factor;
  return Profile(p.kind(), p.seats(), p.candidates(), std::move(gs));
}

void require_countable(const Profile& p) {
  if (p.num_candidates() > kMaxCandidates)
    throw ValidationError("at most " + std::to_string(kMaxCandidates) + " candidates are supported");
  if (p.total().sign() <= 0) throw ValidationError("profile has zero total weight");
}

Mask mask_of(const std::vector<int>& names) {
  Mask m = 0;
  for (int n : names) m |= Mask{1} << n;
  return m;
}

Committee committee_of_mask(Mask m) {
  Committee c;
  for (int i = 0; m; ++i, m >>= 1)
    if (m & 1) c.push_back(i);
  return c;
}

std::vector<Committee> all_subsets(const std::vector<int>& pool, int k) {
  std::vector<Committee> out;
  if (k < 0 || k > static_cast<int>(pool.size())) return out;
  std::vector<bool> pick(pool.size(), false);
  std::fill(pick.begin(), pick.begin() + k, true);
  do {
    Committee c;
    for (std::size_t i = 0; i < pool.size(); ++i)
      if (pick[i]) c.push_back(pool[i]);
    std::sort(c.begin(), c.end());
    out.push_back(std::move(c));
  } while (std::prev_permutation(pick.begin(), pick.end()));
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace pthresh
