#include "pthresh/ordered_methods.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <optional>
#include <tuple>

#include "pthresh/errors.hpp"

namespace pthresh {

namespace {

void require_ordered(const Profile& p, const char* who) {
  if (p.kind() != BallotKind::Ordered)
    throw ValidationError(std::string(who) + " needs ordered ballots, got " + to_string(p.kind()));
  require_countable(p);
}

Mask all_mask(int n) { return n == 64 ? ~Mask{0} : (Mask{1} << n) - 1; }

// First name on the ballot outside `skip`, or -1.
int first_outside(const std::vector<int>& names, Mask skip) {
  for (int c : names)
    if (!(skip >> c & 1)) return c;
  return -1;
}

}  // namespace

StvTrace stv_count_trace(const Rational& delta, const Profile& p, const CountOptions& opt) {
  require_ordered(p, "STV");
  const int n = p.num_candidates(), S = p.seats();
  if (delta > Rational(1) || delta <= Rational(-S)) throw DomainError("STV needs -S < delta <= 1");
  const auto& groups = p.groups();
  const Rational V = p.total();
  const Rational Q = V / (Rational(S) + delta);

  struct State {
    Mask elected = 0, eliminated = 0;
    std::vector<Rational> value;
    auto key() const { return std::tie(elected, eliminated, value); }
    bool operator<(const State& o) const { return key() < o.key(); }
  };
  StvTrace tr;
  State start;
  for (const auto& g : groups) start.value.push_back(g.weight);
  std::vector<State> frontier{start};
  std::vector<Mask> done;

  while (!frontier.empty()) {
    std::vector<State> next;
    auto push = [&](State s) {
      if (std::popcount(s.elected) == S) {
        done.push_back(s.elected);
        return;
      }
      next.push_back(std::move(s));
    };
    for (const State& st : frontier) {
      const Mask gone = st.elected | st.eliminated;
      const Mask continuing = all_mask(n) & ~gone;
      const int unfilled = S - std::popcount(st.elected);

      std::vector<Rational> tally(static_cast<std::size_t>(n));
      Rational live, exhausted;
      for (std::size_t g = 0; g < groups.size(); ++g) {
        int c = first_outside(groups[g].names, gone);
        if (c < 0) exhausted += st.value[g];
        else {
          tally[static_cast<std::size_t>(c)] += st.value[g];
          live += st.value[g];
        }
      }
      if (live + exhausted + Q * Rational(std::popcount(st.elected)) != V) tr.conserved = false;

      if (std::popcount(continuing) <= unfilled) {
        State s = st;
        s.elected |= continuing;
        if (std::popcount(s.elected) < S) throw ValidationError("STV ran out of candidates");
        push(std::move(s));
        continue;
      }
      bool any_quota = false;
      for (int c = 0; c < n; ++c) {
        if (!(continuing >> c & 1) || tally[static_cast<std::size_t>(c)] < Q) continue;
        any_quota = true;
        State s = st;
        s.elected |= Mask{1} << c;
        const Rational& v = tally[static_cast<std::size_t>(c)];
        Rational factor = (v - Q) / v;
        for (std::size_t g = 0; g < groups.size(); ++g)
          if (first_outside(groups[g].names, gone) == c) s.value[g] *= factor;
        push(std::move(s));
      }
      if (any_quota) continue;
      std::optional<Rational> low;
      for (int c = 0; c < n; ++c)
        if ((continuing >> c & 1) && (!low || tally[static_cast<std::size_t>(c)] < *low)) low = tally[static_cast<std::size_t>(c)];
      for (int c = 0; c < n; ++c) {
        if (!(continuing >> c & 1) || tally[static_cast<std::size_t>(c)] != *low) continue;
        State s = st;
        s.eliminated |= Mask{1} << c;
        push(std::move(s));
      }
    }
    std::sort(next.begin(), next.end());
    next.erase(std::unique(next.begin(), next.end(), [](const State& a, const State& b) { return !(a < b) && !(b < a); }),
               next.end());
    if (next.size() > opt.branch_cap) {
      next.resize(opt.branch_cap);
      tr.outcomes.truncated = true;
    }
    frontier = std::move(next);
  }
  for (Mask m : done) tr.outcomes.committees.push_back(committee_of_mask(m));
  tr.outcomes.canonicalize();
  if (tr.outcomes.committees.size() > opt.branch_cap) {
    tr.outcomes.committees.resize(opt.branch_cap);
    tr.outcomes.truncated = true;
  }
  return tr;
}

OutcomeSet stv_count(const Rational& delta, const Profile& p, const CountOptions& opt) {
  return stv_count_trace(delta, p, opt).outcomes;
}

PhragmenResult phragmen_ordered(const Profile& p, const CountOptions& opt) {
  require_ordered(p, "ordered Phragmen");
  const int n = p.num_candidates();
  const auto& groups = p.groups();
  using Key = std::pair<Mask, std::vector<Rational>>;
  std::map<Key, LoadState> frontier;
  LoadState start;
  start.loads.assign(groups.size(), Rational(0));
  frontier.emplace(Key{0, start.loads}, start);
  PhragmenResult res;

  for (int round = 0; round < p.seats(); ++round) {
    std::map<Key, LoadState> next;
    for (const auto& [key, st] : frontier) {
      const Mask elected = key.first;
      // Supporters of c: groups whose first unelected name is c.
      std::vector<std::vector<std::size_t>> sup(static_cast<std::size_t>(n));
      for (std::size_t g = 0; g < groups.size(); ++g) {
        int c = first_outside(groups[g].names, elected);
        if (c >= 0 && groups[g].weight.sign() > 0) sup[static_cast<std::size_t>(c)].push_back(g);
      }
      std::vector<std::optional<Rational>> level(static_cast<std::size_t>(n));
      std::optional<Rational> best;
      for (int c = 0; c < n; ++c) {
        auto& s = sup[static_cast<std::size_t>(c)];
        if ((elected >> c & 1) || s.empty()) continue;
        std::sort(s.begin(), s.end(), [&](std::size_t a, std::size_t b) { return st.loads[a] < st.loads[b]; });
        Rational w, wx;
        for (std::size_t j = 0; j < s.size(); ++j) {
          w += groups[s[j]].weight;
          wx += groups[s[j]].weight * st.loads[s[j]];
          Rational t = (Rational(1) + wx) / w;
          if (j + 1 == s.size() || t <= st.loads[s[j + 1]]) {
            level[static_cast<std::size_t>(c)] = t;
            break;
          }
        }
        if (!best || *level[static_cast<std::size_t>(c)] < *best) best = level[static_cast<std::size_t>(c)];
      }
      for (int c = 0; c < n; ++c) {
        if (elected >> c & 1) continue;
        const auto& t = level[static_cast<std::size_t>(c)];
        if (best ? !(t && *t == *best) : false) continue;
        LoadState ns = st;
        if (t) {
          for (std::size_t g : sup[static_cast<std::size_t>(c)])
            if (ns.loads[g] < *t) ns.loads[g] = *t;
        } else {
          ++ns.unsupported;
        }
        Rational mx(0);
        for (const auto& x : ns.loads) mx = max(mx, x);
        ns.max_history.push_back(mx);
        Key k{elected | (Mask{1} << c), ns.loads};
        if (next.count(k)) continue;
        if (next.size() >= opt.branch_cap) {
          res.outcomes.truncated = true;
          continue;
        }
        next.emplace(std::move(k), std::move(ns));
      }
    }
    frontier = std::move(next);
  }
  for (auto& [key, st] : frontier) {
    Committee c = committee_of_mask(key.first);
    res.outcomes.committees.push_back(c);
    res.finals.push_back({std::move(c), st});
  }
  res.outcomes.canonicalize();
  return res;
}

OutcomeSet thiele_ordered(const Profile& p, const CountOptions& opt) {
  require_ordered(p, "ordered Thiele");
  const int n = p.num_candidates();
  const auto& groups = p.groups();
  std::map<Mask, bool> frontier{{0, true}};
  OutcomeSet out;
  for (int round = 0; round < p.seats(); ++round) {
    std::map<Mask, bool> next;
    for (const auto& [e, unused] : frontier) {
      std::vector<Rational> score(static_cast<std::size_t>(n));
      for (const auto& g : groups) {
        for (std::size_t pos = 0; pos < g.names.size(); ++pos) {
          if (e >> g.names[pos] & 1) continue;
          score[static_cast<std::size_t>(g.names[pos])] += g.weight / Rational(static_cast<long>(pos) + 1);
          break;
        }
      }
      std::optional<Rational> best;
      for (int c = 0; c < n; ++c)
        if (!(e >> c & 1) && (!best || score[static_cast<std::size_t>(c)] > *best)) best = score[static_cast<std::size_t>(c)];
      for (int c = 0; c < n; ++c) {
        if ((e >> c & 1) || score[static_cast<std::size_t>(c)] != *best) continue;
        Mask ne = e | (Mask{1} << c);
        if (next.count(ne)) continue;
        if (next.size() >= opt.branch_cap) {
          out.truncated = true;
          continue;
        }
        next.emplace(ne, true);
      }
    }
    frontier = std::move(next);
  }
  for (const auto& [e, unused] : frontier) out.committees.push_back(committee_of_mask(e));
  out.canonicalize();
  return out;
}

OutcomeSet borda_count(const WeightScheme& w, const Profile& p, const CountOptions& opt) {
  require_ordered(p, "Borda");
  std::vector<Rational> score(static_cast<std::size_t>(p.num_candidates()));
  for (const auto& g : p.groups())
    for (std::size_t pos = 0; pos < g.names.size(); ++pos)
      score[static_cast<std::size_t>(g.names[pos])] += g.weight * w.w(static_cast<int>(pos) + 1);
  return top_scores(score, p.seats(), opt.branch_cap);
}

}  // namespace pthresh
