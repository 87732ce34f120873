#include "pthresh/search.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

#include "pthresh/errors.hpp"
#include "pthresh/thresholds.hpp"

namespace pthresh {

namespace {

using Ballot = std::vector<int>;

struct Budget {};

std::string cand(int id, int ell) { return id < ell ? "A" + std::to_string(id + 1) : "B" + std::to_string(id - ell + 1); }

// Ballots over `pool` of length 1..maxlen (subsets when unordered, sequences when ordered).
std::vector<Ballot> ballots_over(const std::vector<int>& pool, int maxlen, bool ordered) {
  std::vector<Ballot> out;
  Ballot cur;
  std::vector<bool> used(pool.size(), false);
  std::function<void(std::size_t)> rec = [&](std::size_t start) {
    if (!cur.empty()) out.push_back(cur);
    if (static_cast<int>(cur.size()) == maxlen) return;
    for (std::size_t i = ordered ? 0 : start; i < pool.size(); ++i) {
      if (used[i]) continue;
      used[i] = true;
      cur.push_back(pool[i]);
      rec(i + 1);
      cur.pop_back();
      used[i] = false;
    }
  };
  rec(0);
  std::stable_sort(out.begin(), out.end(), [](const Ballot& a, const Ballot& b) { return a.size() < b.size(); });
  return out;
}

// True if b names every id in [0, n).
bool contains_prefix_ids(const Ballot& b, int n) {
  for (int x = 0; x < n; ++x)
    if (std::find(b.begin(), b.end(), x) == b.end()) return false;
  return true;
}

std::vector<int> range(int from, int to) {
  std::vector<int> v;
  for (int i = from; i < to; ++i) v.push_back(i);
  return v;
}

// Calls fn for every strictly increasing index vector of size lo..hi over [0, n).
void for_each_choice(int n, int lo, int hi, const std::function<void(const std::vector<int>&)>& fn) {
  std::vector<int> idx;
  std::function<void(int)> rec = [&](int start) {
    if (static_cast<int>(idx.size()) >= lo) fn(idx);
    if (static_cast<int>(idx.size()) == hi) return;
    for (int i = start; i < n; ++i) {
      idx.push_back(i);
      rec(i + 1);
      idx.pop_back();
    }
  };
  rec(0);
}

// Weight vectors in [1, d]^k; `nondecreasing` restricts to sorted vectors.
void for_each_weights(int k, int d, bool nondecreasing, const std::function<void(const std::vector<int>&)>& fn) {
  std::vector<int> w(static_cast<std::size_t>(k), 1);
  std::function<void(int)> rec = [&](int i) {
    if (i == k) {
      fn(w);
      return;
    }
    for (int v = nondecreasing && i > 0 ? w[static_cast<std::size_t>(i - 1)] : 1; v <= d; ++v) {
      w[static_cast<std::size_t>(i)] = v;
      rec(i + 1);
    }
  };
  rec(0);
}

// Compositions of `units` into at most `groups` positive parts over `n` options.
void for_each_allocation(int n, int units, int groups,
                         const std::function<void(const std::vector<std::pair<int, int>>&)>& fn) {
  std::vector<std::pair<int, int>> cur;
  std::function<void(int, int)> rec = [&](int start, int left) {
    if (left == 0) {
      fn(cur);
      return;
    }
    if (static_cast<int>(cur.size()) == groups) return;
    for (int i = start; i < n; ++i)
      for (int u = left; u >= 1; --u) {
        cur.emplace_back(i, u);
        rec(i + 1, left - u);
        cur.pop_back();
      }
  };
  rec(0, units);
}

class Searcher {
 public:
  Searcher(const MethodId& m, ScenarioId s, int ell, int seats, const SearchSpec& spec)
      : m_(m), s_(s), ell_(ell), seats_(seats), spec_(spec) {
    opt_.branch_cap = spec.branch_cap;
  }

  SearchResult run() {
    try {
      if (m_.ballot_kind() == BallotKind::Party) party_kind();
      else if (s_ == ScenarioId::Party) party_lists();
      else if (s_ == ScenarioId::Tactic) tactic();
      else general();
    } catch (const Budget&) {
      res_.budget_exhausted = true;
    }
    return res_;
  }

 private:
  const MethodId& m_;
  ScenarioId s_;
  int ell_, seats_;
  const SearchSpec& spec_;
  CountOptions opt_;
  SearchResult res_;

  bool ordered() const { return m_.ballot_kind() == BallotKind::Ordered; }
  int ballot_len() const { return std::min(spec_.max_ballot_length, max_ballot_size(m_, seats_)); }

  std::vector<std::string> universe(int c) const {
    std::vector<std::string> out;
    for (int i = 0; i < std::max(c, seats_); ++i) out.push_back(cand(i, ell_));
    return out;
  }

  // Returns true if a bad outcome is reachable; records it if the fraction improves.
  bool evaluate(std::vector<NamedGroup> groups, const std::vector<std::string>& extra,
                std::optional<std::vector<std::string>> target, bool record = true) {
    if (res_.evaluated >= spec_.budget) throw Budget{};
    ++res_.evaluated;
    try {
      Profile p = normalize(Profile::from_named(m_.ballot_kind(), seats_, groups, extra));
      std::optional<Committee> a;
      if (target) a = p.committee_of(*target);
      ScenarioInstance inst = make_instance(std::move(p), s_, ell_, a);
      if (!is_instance(inst)) return false;
      if (!is_bad_outcome_possible(inst, count(m_, inst.profile, opt_))) return false;
      Rational f = w_fraction(inst);
      if (record && (!res_.best || f > *res_.best)) {
        res_.best = f;
        res_.witness = Witness{std::move(inst), f, "search"};
      }
      return true;
    } catch (const IndeterminateError&) {
      ++res_.indeterminate;
    } catch (const ValidationError&) {
    } catch (const BudgetError&) {
      ++res_.indeterminate;
    }
    return false;
  }

  bool improves(long w, long total) const { return !res_.best || Rational(w, total) > *res_.best; }

  void party_kind() {
    const int d = spec_.weight_grid;
    for (int others = 1; others < spec_.max_ballot_groups; ++others)
      for (int ww = 1; ww <= d; ++ww)
        for_each_weights(others, d, true, [&](const std::vector<int>& w) {
          long rest = std::accumulate(w.begin(), w.end(), 0L);
          if (!improves(ww, ww + rest)) return;
          std::vector<NamedGroup> g{{Rational(ww), {"P0"}, true}};
          for (std::size_t i = 0; i < w.size(); ++i) g.push_back({Rational(w[i]), {"Q" + std::to_string(i + 1)}, false});
          evaluate(g, {}, std::nullopt);
        });
  }

  void party_lists() {
    if (max_ballot_size(m_, seats_) < ell_) return;  // no instances
    const int len = std::max(ell_, ballot_len());
    const int d = spec_.weight_grid;
    for (int others = 1; others < spec_.max_ballot_groups; ++others) {
      std::vector<NamedGroup> proto;
      std::vector<std::string> extra;
      for (int pi = 0; pi <= others; ++pi) {
        std::vector<std::string> list;
        for (int j = 1; j <= len; ++j)
          list.push_back(pi == 0 ? "A" + std::to_string(j) : "P" + std::to_string(pi) + "_" + std::to_string(j));
        proto.push_back({Rational(1), list, pi == 0});
      }
      for (int i = (others + 1) * len; i < seats_; ++i) extra.push_back("Z" + std::to_string(i));
      for (int ww = 1; ww <= d; ++ww)
        for_each_weights(others, d, true, [&](const std::vector<int>& w) {
          long rest = std::accumulate(w.begin(), w.end(), 0L);
          if (!improves(ww, ww + rest)) return;
          auto g = proto;
          g[0].weight = Rational(ww);
          for (std::size_t i = 0; i < w.size(); ++i) g[i + 1].weight = Rational(w[i]);
          evaluate(g, extra, std::nullopt);
        });
    }
  }

  std::vector<Ballot> w_options(const std::vector<Ballot>& all) const {
    std::vector<Ballot> out;
    const int len = ballot_len();
    auto prefix_is = [](const Ballot& b, int m) {
      if (static_cast<int>(b.size()) < m) return false;
      std::vector<int> head(b.begin(), b.begin() + m);
      std::sort(head.begin(), head.end());
      return head == range(0, m);
    };
    switch (s_) {
      case ScenarioId::Same:
        for (int k = ell_; k <= len; ++k) out.push_back(range(0, k));
        break;
      case ScenarioId::PJR:
      case ScenarioId::EJR:
        for (const auto& b : all)
          if (contains_prefix_ids(b, ell_))
            out.push_back(b);
        break;
      case ScenarioId::PSC:
        for (const auto& b : all)
          for (int m = ell_; m <= static_cast<int>(b.size()); ++m)
            if (prefix_is(b, m)) {
              out.push_back(b);
              break;
            }
        break;
      case ScenarioId::WPSC:
        for (const auto& b : all)
          if (prefix_is(b, ell_)) out.push_back(b);
        break;
      default: break;
    }
    return out;
  }

  std::vector<std::string> to_names(const Ballot& b) const {
    std::vector<std::string> out;
    for (int id : b) out.push_back(cand(id, ell_));
    return out;
  }

  void general() {
    const int c = spec_.max_candidates;
    if (c < ell_) return;
    const auto all = ballots_over(range(0, c), ballot_len(), ordered());
    const auto wopt = w_options(all);
    const auto names = universe(c);
    const int d = spec_.weight_grid, g = spec_.max_ballot_groups;
    std::optional<std::vector<std::string>> target;
    if (s_ == ScenarioId::PJR || s_ == ScenarioId::EJR) {
      target = std::vector<std::string>{};
      for (int a = 0; a < ell_; ++a) target->push_back(cand(a, ell_));
    }
    for_each_choice(static_cast<int>(wopt.size()), 1, g, [&](const std::vector<int>& wi) {
      const int rest_groups = g - static_cast<int>(wi.size());
      for_each_choice(static_cast<int>(all.size()), 0, rest_groups, [&](const std::vector<int>& oi) {
        for_each_weights(static_cast<int>(wi.size()), d, false, [&](const std::vector<int>& ww) {
          long wsum = std::accumulate(ww.begin(), ww.end(), 0L);
          for_each_weights(static_cast<int>(oi.size()), d, false, [&](const std::vector<int>& ow) {
            long osum = std::accumulate(ow.begin(), ow.end(), 0L);
            if (!improves(wsum, wsum + osum)) return;
            std::vector<NamedGroup> groups;
            for (std::size_t i = 0; i < wi.size(); ++i)
              groups.push_back({Rational(ww[i]), to_names(wopt[static_cast<std::size_t>(wi[i])]), true});
            for (std::size_t i = 0; i < oi.size(); ++i)
              groups.push_back({Rational(ow[i]), to_names(all[static_cast<std::size_t>(oi[i])]), false});
            evaluate(groups, names, target);
          });
        });
      });
    });
  }

  // W (candidates A) commits to an allocation of w unit votes; the adversary
  // then allocates V - w units over ballots naming only B candidates.
  void tactic() {
    const int c = spec_.max_candidates;
    const int total = spec_.weight_grid;
    if (c <= ell_) return;
    const auto wopt = ballots_over(range(0, ell_), ballot_len(), ordered());
    const auto aopt = ballots_over(range(ell_, c), ballot_len(), ordered());
    const auto names = universe(c);
    std::vector<std::string> target;
    for (int a = 0; a < ell_; ++a) target.push_back(cand(a, ell_));
    for (int w = total - 1; w >= 1; --w) {
      bool every_strategy_loses = true;
      std::optional<std::vector<NamedGroup>> first_bad;
      for_each_allocation(static_cast<int>(wopt.size()), w, spec_.max_ballot_groups,
                          [&](const std::vector<std::pair<int, int>>& strat) {
                            if (!every_strategy_loses) return;
                            bool beaten = false;
                            for_each_allocation(static_cast<int>(aopt.size()), total - w, spec_.max_ballot_groups,
                                                [&](const std::vector<std::pair<int, int>>& resp) {
                                                  if (beaten) return;
                                                  std::vector<NamedGroup> groups;
                                                  for (auto [i, u] : strat)
                                                    groups.push_back({Rational(u), to_names(wopt[static_cast<std::size_t>(i)]), true});
                                                  for (auto [i, u] : resp)
                                                    groups.push_back({Rational(u), to_names(aopt[static_cast<std::size_t>(i)]), false});
                                                  if (evaluate(groups, names, target, false)) {
                                                    beaten = true;
                                                    if (!first_bad) first_bad = groups;
                                                  }
                                                });
                            if (!beaten) every_strategy_loses = false;
                          });
      if (every_strategy_loses && first_bad) {
        evaluate(*first_bad, names, target);
        return;
      }
    }
  }
};

}  // namespace

SearchResult search_lower_bound(const MethodId& m, ScenarioId s, int ell, int seats, const SearchSpec& spec) {
  if (spec.max_candidates < 1 || spec.weight_grid < 1 || spec.max_ballot_groups < 1 || spec.max_ballot_length < 1 ||
      spec.branch_cap < 1 || spec.budget < 1)
    throw DomainError("search bounds must be positive");
  if (spec.max_candidates > kMaxCandidates) throw DomainError("at most 64 candidates");
  if (ell < 1 || ell > seats) throw DomainError("need 1 <= ell <= S");
  if (!supports(m, s)) throw UnsupportedError("scenario does not apply to the method's ballots");
  if (!m.has_engine()) throw UnsupportedError(m.str() + " has no counting engine");
  return Searcher(m, s, ell, seats, spec).run();
}

}  // namespace pthresh
