#include <doctest.h>

#include <functional>
#include <random>

#include "pthresh/errors.hpp"
#include "pthresh/method.hpp"
#include "pthresh/party_methods.hpp"
#include "support.hpp"

using namespace pthresh;
using testkit::as_set;
using V = std::vector<Rational>;
using Vectors = std::set<std::vector<int>>;

namespace {

void compositions(int parties, int seats, const std::function<void(const SeatVector&)>& f) {
  SeatVector s(static_cast<std::size_t>(parties), 0);
  std::function<void(int, int)> rec = [&](int i, int left) {
    if (i == parties - 1) {
      s[static_cast<std::size_t>(i)] = left;
      f(s);
      return;
    }
    for (int k = 0; k <= left; ++k) {
      s[static_cast<std::size_t>(i)] = k;
      rec(i + 1, left - k);
    }
  };
  rec(0, seats);
}

// Min-max characterisation: no unseated quotient beats a seated one.
// Positive votes only; d(1) = 0 counts as an infinite quotient.
Vectors divisor_oracle(const Rational& gamma, const V& votes, int seats) {
  Vectors out;
  compositions(static_cast<int>(votes.size()), seats, [&](const SeatVector& s) {
    bool ok = true;
    for (std::size_t i = 0; i < votes.size() && ok; ++i) {
      Rational next_div = Rational(s[i]) + gamma;  // d(s_i + 1)
      for (std::size_t j = 0; j < votes.size() && ok; ++j) {
        if (s[j] == 0 || i == j) continue;
        Rational last_div = Rational(s[j] - 1) + gamma;  // d(s_j)
        if (last_div.is_zero()) continue;
        if (next_div.is_zero() || votes[i] * last_div > votes[j] * next_div) ok = false;
      }
    }
    if (ok) out.insert(s);
  });
  return out;
}

Vectors quota_oracle(const Rational& delta, const V& votes, int seats) {
  Rational total(0);
  for (const auto& v : votes) total += v;
  Rational q = total / (Rational(seats) + delta);
  Vectors out;
  compositions(static_cast<int>(votes.size()), seats, [&](const SeatVector& s) {
    Rational lo(0), hi(1);
    for (std::size_t i = 0; i < votes.size(); ++i) {
      Rational r = votes[i] / q - Rational(s[i]);
      lo = max(lo, r);
      hi = min(hi, r + 1);
    }
    if (lo <= hi) out.insert(s);
  });
  return out;
}

}  // namespace

TEST_CASE("divisor examples") {
  CHECK(as_set(divisor_apportion(1, {37, 13}, 3).vectors) == Vectors{{2, 1}});
  CHECK(as_set(divisor_apportion(1, {10}, 4).vectors) == Vectors{{4}});
  CHECK(as_set(divisor_apportion(Rational(1, 2), {6, 3, 1}, 4).vectors) == Vectors{{3, 1, 0}});
  // Exact tie between two parties for the last seat.
  CHECK(as_set(divisor_apportion(1, {1, 1}, 1).vectors) == Vectors{{0, 1}, {1, 0}});
}

TEST_CASE("Adams") {
  CHECK_THROWS_AS(divisor_apportion(0, {5, 3, 1}, 2), AdamsIllDefined);
  CHECK(as_set(divisor_apportion(0, {5, 3, 1}, 4).vectors) == Vectors{{2, 1, 1}});
  CHECK(as_set(divisor_apportion(0, {5, 0, 1}, 2).vectors) == Vectors{{1, 0, 1}});
}

TEST_CASE("quota examples") {
  CHECK(as_set(quota_apportion(0, {50, 30, 20}, 5).vectors) == Vectors{{3, 1, 1}, {2, 2, 1}});
  CHECK(as_set(quota_apportion(1, {55, 45}, 4).vectors) == Vectors{{2, 2}});
  CHECK(as_set(quota_apportion(0, {100}, 3).vectors) == Vectors{{3}});
  CHECK_THROWS(quota_apportion(0, {0, 0}, 2));
}

TEST_CASE("branch cap truncates") {
  auto a = divisor_apportion(1, {1, 1, 1, 1, 1}, 2, 3);
  CHECK(a.truncated);
  CHECK(a.vectors.size() <= 3);
  CHECK_FALSE(divisor_apportion(1, {1, 1, 1, 1, 1}, 2).truncated);
  CHECK(divisor_apportion(1, {1, 1, 1, 1, 1}, 2).vectors.size() == 10);
}

TEST_CASE("party profiles through count") {
  auto p = testkit::make(BallotKind::Party, 3, {testkit::grp(37, {"KLM"}), testkit::grp(13, {"ABC"})});
  auto o = count(MethodId::parse("dhondt"), p);
  REQUIRE(o.size() == 1);
  // Parties sort as ABC, KLM.
  CHECK(committee_to_seats(o.committees[0], 2) == SeatVector{1, 2});
  CHECK(seats_to_committee({1, 2}) == Committee{0, 1, 1});
}

TEST_CASE("property: divisor and quota agree with independent oracles") {
  std::mt19937_64 rng(0xd1f150);
  const std::vector<Rational> gammas{Rational(1), Rational(1, 2), Rational(1, 3), Rational(0)};
  const std::vector<Rational> deltas{Rational(0), Rational(1, 2), Rational(1)};
  for (int it = 0; it < 600; ++it) {
    int parties = testkit::uniform(rng, 1, 4);
    int seats = testkit::uniform(rng, 1, 6);
    V votes;
    for (int i = 0; i < parties; ++i) votes.push_back(Rational(testkit::uniform(rng, 1, 20)));
    const auto& g = gammas[static_cast<std::size_t>(it) % gammas.size()];
    if (g.is_zero() && parties > seats) {
      CHECK_THROWS_AS(divisor_apportion(g, votes, seats), AdamsIllDefined);
    } else {
      auto a = divisor_apportion(g, votes, seats);
      CHECK_FALSE(a.truncated);
      CHECK(as_set(a.vectors) == divisor_oracle(g, votes, seats));
    }
    const auto& d = deltas[static_cast<std::size_t>(it) % deltas.size()];
    auto q = quota_apportion(d, votes, seats);
    CHECK(as_set(q.vectors) == quota_oracle(d, votes, seats));
    for (const auto& s : q.vectors) {
      int sum = 0;
      for (int x : s) sum += x;
      CHECK(sum == seats);
    }
  }
}

TEST_CASE("property: divisor methods are monotone in a party's votes") {
  std::mt19937_64 rng(0x30a0);
  for (int it = 0; it < 500; ++it) {
    int parties = testkit::uniform(rng, 2, 4);
    int seats = testkit::uniform(rng, 1, 6);
    V votes;
    for (int i = 0; i < parties; ++i) votes.push_back(Rational(testkit::uniform(rng, 1, 20)));
    Rational g = it % 2 ? Rational(1) : Rational(1, 2);
    auto i = static_cast<std::size_t>(testkit::uniform(rng, 0, parties - 1));
    auto before = divisor_apportion(g, votes, seats).vectors;
    votes[i] += Rational(testkit::uniform(rng, 1, 10));
    auto after = divisor_apportion(g, votes, seats).vectors;
    auto min_seats = [&](const std::vector<SeatVector>& vs) {
      int m = seats;
      for (const auto& s : vs) m = std::min(m, s[i]);
      return m;
    };
    CHECK(min_seats(after) >= min_seats(before));
  }
}
