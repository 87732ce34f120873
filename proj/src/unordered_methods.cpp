#include "pthresh/unordered_methods.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <numeric>
#include <optional>

#include "pthresh/errors.hpp"

namespace pthresh {

namespace {

void require_kind(const Profile& p, BallotKind k, const char* who) {
  if (p.kind() != k)
    throw ValidationError(std::string(who) + " needs " + to_string(k) + " ballots, got " + to_string(p.kind()));
  require_countable(p);
}

std::vector<Mask> group_masks(const Profile& p) {
  std::vector<Mask> m;
  for (const auto& g : p.groups()) m.push_back(mask_of(g.names));
  return m;
}

std::uint64_t binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  long double r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r > 1.8e19L ? UINT64_MAX : static_cast<std::uint64_t>(r + 0.5L);
}

// Water-filling level: smallest t with sum_g v_g * max(0, t - x_g) = 1.
std::optional<Rational> fill_level(const std::vector<std::pair<Rational, Rational>>& load_weight) {
  if (load_weight.empty()) return std::nullopt;
  auto sorted = load_weight;
  std::sort(sorted.begin(), sorted.end());
  Rational w, wx;
  for (std::size_t j = 0; j < sorted.size(); ++j) {
    w += sorted[j].second;
    wx += sorted[j].second * sorted[j].first;
    Rational t = (Rational(1) + wx) / w;
    if (j + 1 == sorted.size() || t <= sorted[j + 1].first) return t;
  }
  return std::nullopt;
}

}  // namespace

OutcomeSet top_scores(const std::vector<Rational>& scores, int seats, std::size_t branch_cap) {
  const int n = static_cast<int>(scores.size());
  if (n < seats) throw ValidationError("fewer candidates than seats");
  std::vector<Rational> sorted = scores;
  std::sort(sorted.begin(), sorted.end(), std::greater<>());
  const Rational& cut = sorted[static_cast<std::size_t>(seats) - 1];
  Committee sure;
  std::vector<int> tied;
  for (int i = 0; i < n; ++i) {
    if (scores[static_cast<std::size_t>(i)] > cut) sure.push_back(i);
    else if (scores[static_cast<std::size_t>(i)] == cut) tied.push_back(i);
  }
  const int need = seats - static_cast<int>(sure.size());
  OutcomeSet out;
  if (binomial(static_cast<int>(tied.size()), need) > branch_cap) out.truncated = true;
  std::vector<bool> pick(tied.size(), false);
  std::fill(pick.begin(), pick.begin() + need, true);
  do {
    Committee c = sure;
    for (std::size_t i = 0; i < tied.size(); ++i)
      if (pick[i]) c.push_back(tied[i]);
    out.committees.push_back(std::move(c));
  } while (out.committees.size() < branch_cap && std::prev_permutation(pick.begin(), pick.end()));
  out.canonicalize();
  return out;
}

OutcomeSet score_family_count(const ApprovalRule& rule, const Profile& p, const CountOptions& opt) {
  require_kind(p, BallotKind::Unordered, "approval-family count");
  const int S = p.seats();
  std::size_t cap = SIZE_MAX;
  switch (rule.kind) {
    case ApprovalRule::Kind::BlockVote: cap = static_cast<std::size_t>(S); break;
    case ApprovalRule::Kind::Sntv: cap = 1; break;
    case ApprovalRule::Kind::Limited:
      if (rule.limit < 1 || rule.limit > S) throw DomainError("limited vote needs 1 <= L <= S");
      cap = static_cast<std::size_t>(rule.limit);
      break;
    default: break;
  }
  std::vector<Rational> score(static_cast<std::size_t>(p.num_candidates()));
  for (std::size_t gi = 0; gi < p.groups().size(); ++gi) {
    const auto& g = p.groups()[gi];
    if (g.names.size() > cap) {
      std::string names;
      for (int n : g.names) names += " " + p.name(n);
      throw ValidationError("ballot group " + std::to_string(gi + 1) + " {" + names.substr(1) + "} has " +
                            std::to_string(g.names.size()) + " names, the rule allows " + std::to_string(cap));
    }
    Rational share = rule.kind == ApprovalRule::Kind::EqualEvenCumulative
                         ? g.weight / Rational(static_cast<long>(g.names.size()))
                         : g.weight;
    for (int n : g.names) score[static_cast<std::size_t>(n)] += share;
  }
  return top_scores(score, S, opt.branch_cap);
}

PhragmenResult phragmen_unordered(const Profile& p, const CountOptions& opt) {
  require_kind(p, BallotKind::Unordered, "Phragmen");
  const int n = p.num_candidates();
  const auto& groups = p.groups();
  std::vector<Mask> gm = group_masks(p);

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
      std::vector<std::optional<Rational>> level(static_cast<std::size_t>(n));
      std::optional<Rational> best;
      bool any_supported = false;
      for (int c = 0; c < n; ++c) {
        if (elected >> c & 1) continue;
        std::vector<std::pair<Rational, Rational>> lw;
        for (std::size_t g = 0; g < groups.size(); ++g)
          if ((gm[g] >> c & 1) && groups[g].weight.sign() > 0) lw.emplace_back(st.loads[g], groups[g].weight);
        level[static_cast<std::size_t>(c)] = fill_level(lw);
        if (auto& t = level[static_cast<std::size_t>(c)]) {
          any_supported = true;
          if (!best || *t < *best) best = t;
        }
      }
      for (int c = 0; c < n; ++c) {
        if (elected >> c & 1) continue;
        const auto& t = level[static_cast<std::size_t>(c)];
        // Unsupported candidates only come into play once nobody else is left.
        if (any_supported ? !(t && *t == *best) : t.has_value()) continue;
        LoadState ns = st;
        if (t) {
          for (std::size_t g = 0; g < groups.size(); ++g)
            if ((gm[g] >> c & 1) && groups[g].weight.sign() > 0 && ns.loads[g] < *t) ns.loads[g] = *t;
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

OutcomeSet thiele_optimize(const WeightScheme& w, const Profile& p, const CountOptions& opt) {
  require_kind(p, BallotKind::Unordered, "Thiele optimisation");
  const int n = p.num_candidates(), S = p.seats();
  if (binomial(n, S) > opt.enumeration_budget)
    throw BudgetError("Thiele optimisation would examine " + std::to_string(binomial(n, S)) +
                      " committees, budget is " + std::to_string(opt.enumeration_budget));
  std::vector<Mask> gm = group_masks(p);
  std::vector<Rational> psi(static_cast<std::size_t>(S) + 1);
  for (int k = 1; k <= S; ++k) psi[static_cast<std::size_t>(k)] = psi[static_cast<std::size_t>(k) - 1] + w.w(k);

  OutcomeSet out;
  std::optional<Rational> best;
  std::vector<bool> pick(static_cast<std::size_t>(n), false);
  std::fill(pick.begin(), pick.begin() + S, true);
  do {
    Mask e = 0;
    for (int i = 0; i < n; ++i)
      if (pick[static_cast<std::size_t>(i)]) e |= Mask{1} << i;
    Rational total;
    for (std::size_t g = 0; g < gm.size(); ++g)
      total += p.groups()[g].weight * psi[static_cast<std::size_t>(std::popcount(gm[g] & e))];
    if (!best || total > *best) {
      best = total;
      out.committees.clear();
      out.truncated = false;
    }
    if (total == *best) {
      if (out.committees.size() < opt.branch_cap) out.committees.push_back(committee_of_mask(e));
      else out.truncated = true;
    }
  } while (std::prev_permutation(pick.begin(), pick.end()));
  out.canonicalize();
  return out;
}

ThieleTrace thiele_addition_trace(const WeightScheme& w, const Profile& p, const CountOptions& opt) {
  require_kind(p, BallotKind::Unordered, "Thiele addition");
  const int n = p.num_candidates();
  std::vector<Mask> gm = group_masks(p);
  std::vector<Rational> wk(static_cast<std::size_t>(n) + 2);
  for (int k = 1; k <= n + 1; ++k) wk[static_cast<std::size_t>(k)] = w.w(k);

  // State: elected set -> smallest score with which its last member was elected.
  std::map<Mask, std::optional<Rational>> frontier{{0, std::nullopt}};
  ThieleTrace tr;
  for (int round = 0; round < p.seats(); ++round) {
    std::map<Mask, std::optional<Rational>> next;
    for (const auto& [e, last] : frontier) {
      std::vector<Rational> score(static_cast<std::size_t>(n));
      for (std::size_t g = 0; g < gm.size(); ++g) {
        Rational share = p.groups()[g].weight * wk[static_cast<std::size_t>(std::popcount(gm[g] & e)) + 1];
        for (int c : p.groups()[g].names) score[static_cast<std::size_t>(c)] += share;
      }
      std::optional<Rational> best;
      for (int c = 0; c < n; ++c)
        if (!(e >> c & 1) && (!best || score[static_cast<std::size_t>(c)] > *best)) best = score[static_cast<std::size_t>(c)];
      if (last && *best > *last) tr.scores_nonincreasing = false;
      for (int c = 0; c < n; ++c) {
        if ((e >> c & 1) || score[static_cast<std::size_t>(c)] != *best) continue;
        Mask ne = e | (Mask{1} << c);
        auto it = next.find(ne);
        if (it != next.end()) {
          it->second = min(*it->second, *best);
        } else if (next.size() >= opt.branch_cap) {
          tr.outcomes.truncated = true;
        } else {
          next.emplace(ne, best);
        }
      }
    }
    frontier = std::move(next);
  }
  for (const auto& [e, last] : frontier) tr.outcomes.committees.push_back(committee_of_mask(e));
  tr.outcomes.canonicalize();
  return tr;
}

OutcomeSet thiele_addition(const WeightScheme& w, const Profile& p, const CountOptions& opt) {
  return thiele_addition_trace(w, p, opt).outcomes;
}

OutcomeSet thiele_elimination(const Profile& p, const CountOptions& opt) {
  require_kind(p, BallotKind::Unordered, "Thiele elimination");
  const int n = p.num_candidates();
  std::vector<Mask> gm = group_masks(p);
  Mask all = n == 64 ? ~Mask{0} : (Mask{1} << n) - 1;
  std::map<Mask, bool> frontier{{all, true}};
  OutcomeSet out;
  for (int remaining = n; remaining > p.seats(); --remaining) {
    std::map<Mask, bool> next;
    for (const auto& [r, unused] : frontier) {
      std::vector<Rational> score(static_cast<std::size_t>(n));
      for (std::size_t g = 0; g < gm.size(); ++g) {
        int k = std::popcount(gm[g] & r);
        if (k == 0) continue;
        Rational share = p.groups()[g].weight / Rational(k);
        for (int c : p.groups()[g].names)
          if (r >> c & 1) score[static_cast<std::size_t>(c)] += share;
      }
      std::optional<Rational> worst;
      for (int c = 0; c < n; ++c)
        if ((r >> c & 1) && (!worst || score[static_cast<std::size_t>(c)] < *worst)) worst = score[static_cast<std::size_t>(c)];
      for (int c = 0; c < n; ++c) {
        if (!(r >> c & 1) || score[static_cast<std::size_t>(c)] != *worst) continue;
        if (next.count(r & ~(Mask{1} << c))) continue;
        if (next.size() >= opt.branch_cap) {
          out.truncated = true;
          continue;
        }
        next.emplace(r & ~(Mask{1} << c), true);
      }
    }
    frontier = std::move(next);
  }
  for (const auto& [r, unused] : frontier) out.committees.push_back(committee_of_mask(r));
  out.canonicalize();
  return out;
}

}  // namespace pthresh
