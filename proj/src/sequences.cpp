#include "pthresh/sequences.hpp"

#include <bit>
#include <map>
#include <mutex>
#include <shared_mutex>
#include <vector>

#include "pthresh/errors.hpp"

namespace pthresh {

namespace {

std::shared_mutex cache_mutex;
std::vector<Rational> b_cache{Rational(0)};  // index 0 unused
std::map<std::pair<int, std::string>, LpOutcome> alpha_cache;

}  // namespace

Rational seq_b(int n) {
  if (n < 1) throw DomainError("sequence index must be >= 1");
  {
    std::shared_lock lock(cache_mutex);
    if (static_cast<std::size_t>(n) < b_cache.size()) return b_cache[static_cast<std::size_t>(n)];
  }
  std::unique_lock lock(cache_mutex);
  while (b_cache.size() <= static_cast<std::size_t>(n)) {
    int k = static_cast<int>(b_cache.size());
    Rational b(1);
    for (int i = 1; i < k; ++i) b -= b_cache[static_cast<std::size_t>(i)] / Rational(k + 1 - i);
    b_cache.push_back(b);
  }
  return b_cache[static_cast<std::size_t>(n)];
}

Rational seq_a(int n) {
  if (n < 1) throw DomainError("sequence index must be >= 1");
  Rational a;
  for (int i = 1; i <= n; ++i) a += seq_b(i);
  return a;
}

long seq_c(int n) {
  if (n < 1) throw DomainError("sequence index must be >= 1");
  long h = (n + 1) / 2;
  return h * (n + 1 - h);
}

std::string subset_name(unsigned mask) {
  std::string s = "x";
  for (int i = 0; mask >> i; ++i)
    if (mask >> i & 1) s += std::to_string(i + 1);
  return s;
}

LinearProgram build_alpha_lp(int n, const WeightScheme& w, int cap) {
  if (n < 1) throw DomainError("alpha needs n >= 1");
  if (n > cap) throw BudgetError("alpha LP limited to n <= " + std::to_string(cap));
  const unsigned full = (1u << n) - 1;
  LinearProgram lp(full);
  for (unsigned s = 1; s <= full; ++s) {
    lp.names[s - 1] = subset_name(s);
    lp.objective[s - 1] = Rational(1);
  }
  // Score of candidate j (0-based) at step k (0-based), as a coefficient row.
  auto score = [&](int k, int j) {
    std::vector<Rational> row(full);
    unsigned before = (1u << k) - 1;
    for (unsigned s = 1; s <= full; ++s)
      if (s >> j & 1) row[s - 1] = w.w(1 + std::popcount(s & before));
    return row;
  };
  for (int k = 0; k < n; ++k)
    for (int j = k + 1; j < n; ++j) {
      auto row = score(k, k);
      auto other = score(k, j);
      for (unsigned s = 0; s < full; ++s) row[s] -= other[s];
      lp.add(std::move(row), Relation::GE, Rational(0));
    }
  for (int k = 0; k < n; ++k) lp.add(score(k, k), Relation::GE, Rational(1));
  return lp;
}

namespace {

LpOutcome alpha_outcome(int n, const WeightScheme& w) {
  std::pair<int, std::string> key{n, w.key()};
  {
    std::shared_lock lock(cache_mutex);
    auto it = alpha_cache.find(key);
    if (it != alpha_cache.end()) return it->second;
  }
  LpOutcome r = solve(build_alpha_lp(n, w));
  if (r.status != LpOutcome::Status::Optimal) throw Error("alpha LP did not reach an optimum");
  std::unique_lock lock(cache_mutex);
  return alpha_cache.emplace(key, r).first->second;
}

}  // namespace

Rational alpha(int n, const WeightScheme& w) { return alpha_outcome(n, w).value; }

std::vector<Rational> alpha_point(int n, const WeightScheme& w) { return alpha_outcome(n, w).point; }

}  // namespace pthresh
