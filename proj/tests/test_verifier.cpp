#include <doctest.h>

#include "pthresh/audit.hpp"
#include "pthresh/errors.hpp"
#include "pthresh/profile_io.hpp"
#include "pthresh/search.hpp"
#include "pthresh/thresholds.hpp"
#include "pthresh/witness.hpp"
#include "support.hpp"

using namespace pthresh;

namespace {

struct Case {
  std::string token, method;
  ScenarioId scenario;
  int ell, seats;
  std::string fraction;  // expected W share
  bool at_threshold;     // fraction equals the stored headline value
};

const std::vector<Case>& cases() {
  static const std::vector<Case> c{
      {"equal-parties", "dhondt", ScenarioId::Party, 2, 5, "1/3", true},
      {"equal-parties", "sntv", ScenarioId::Tactic, 2, 3, "1/2", true},
      {"divisor-party", "stl", ScenarioId::Party, 2, 3, "3/5", true},
      {"divisor-party", "dhondt", ScenarioId::Party, 1, 2, "1/3", true},
      {"quota-party", "hare", ScenarioId::Party, 2, 4, "7/16", true},
      {"ejr-block", "bv", ScenarioId::EJR, 2, 3, "3/5", true},
      {"ejr-block", "av", ScenarioId::EJR, 3, 5, "5/8", true},
      {"addition-lp", "thiele-add", ScenarioId::Same, 1, 5, "43/223", true},
      {"addition-lp", "thiele-add", ScenarioId::PJR, 3, 5, "9/17", true},
      {"ordered-thiele", "thiele-o", ScenarioId::Same, 2, 5, "48/103", true},
      {"ordered-thiele", "thiele-o", ScenarioId::Tactic, 1, 5, "720/2621", true},
      {"elimination-chain", "thiele-elim", ScenarioId::PJR, 1, 4, "5/21", false},
      {"brill-12", "phragmen", ScenarioId::EJR, 2, 12, "409/2409", false},
      {"tenow-1912", "thiele-add", ScenarioId::Same, 1, 3, "13/50", false},
      {"tactic-o", "thiele-o", ScenarioId::Same, 1, 2, "39/100", false},
      {"tho-two", "thiele-o", ScenarioId::Same, 2, 3, "11/20", false},
  };
  return c;
}

}  // namespace

TEST_CASE("catalog lists every token once") {
  std::set<std::string> seen;
  for (const auto& e : witness_catalog()) {
    CHECK(seen.insert(e.token).second);
    CHECK_FALSE(e.summary.empty());
  }
  for (const auto& c : cases()) CHECK(seen.count(c.token) == 1);
  CHECK_THROWS(construct_witness("no-such-token", MethodId::parse("av"), ScenarioId::Same, 1, 1));
}

TEST_CASE("catalog witnesses verify") {
  for (const auto& c : cases()) {
    CAPTURE(c.token);
    CAPTURE(c.method);
    auto m = MethodId::parse(c.method);
    auto w = construct_witness(c.token, m, c.scenario, c.ell, c.seats);
    CHECK(w.source == c.token);
    CHECK(w.claimed_fraction == Rational::parse(c.fraction));
    CHECK(w_fraction(w.instance) == w.claimed_fraction);
    CHECK(is_instance(w.instance));
    CHECK(verify_witness(w, m));
    if (c.at_threshold) {
      auto t = c.scenario == ScenarioId::Tactic ? threshold_hat(m, c.ell, c.seats)
                                                 : threshold(m, c.scenario, c.ell, c.seats);
      CHECK(t.value == w.claimed_fraction);
    }
  }
}

TEST_CASE("limit witnesses approach their value") {
  for (const auto& [token, method, scen, ell, S] :
       std::vector<std::tuple<std::string, std::string, ScenarioId, int, int>>{
           {"self-vote", "cvq", ScenarioId::Same, 1, 3},
           {"own-first", "phragmen-o", ScenarioId::PSC, 1, 3},
           {"own-first", "thiele-o", ScenarioId::PSC, 1, 2}}) {
    CAPTURE(token);
    auto m = MethodId::parse(method);
    auto target = threshold(m, scen, ell, S).value;
    for (Rational eps : {Rational(1, 4), Rational(1, 6)}) {
      auto w = construct_witness(token, m, scen, ell, S, eps);
      CHECK(verify_witness(w, m));
      CHECK(w.claimed_fraction < target);
      CHECK(target - w.claimed_fraction <= eps);
    }
  }
}

TEST_CASE("a solid majority under block vote has no bad outcome") {
  auto p = testkit::make(BallotKind::Unordered, 3,
                         {testkit::grp(3, {"A1", "A2", "A3"}, true), testkit::grp(2, {"B1", "B2", "B3"})});
  Witness w{make_instance(p, ScenarioId::Same, 3), Rational(3, 5), "manual"};
  CHECK_FALSE(verify_witness(w, MethodId::parse("bv")));
  Witness wrong{make_instance(p, ScenarioId::Same, 3), Rational(1, 2), "manual"};
  CHECK_FALSE(verify_witness(wrong, MethodId::parse("bv")));
}

TEST_CASE("fixture profiles as witnesses") {
  auto split = load_profile(std::string(PTHRESH_DATA_DIR) + "/etenow1912-split.profile");
  Witness t{make_instance(split, ScenarioId::Same, 1), Rational(13, 50), "fixture"};
  CHECK(verify_witness(t, MethodId::parse("thiele-add")));

  auto tho2 = load_profile(std::string(PTHRESH_DATA_DIR) + "/etho2.profile");
  Witness h{make_instance(tho2, ScenarioId::Same, 2), Rational(11, 20), "fixture"};
  CHECK(verify_witness(h, MethodId::parse("thiele-o")));
}

TEST_CASE("search rediscovers small thresholds") {
  SearchSpec bv{5, 2, 4, 3, 10000, 1'000'000};
  auto r = search_lower_bound(MethodId::parse("bv"), ScenarioId::EJR, 2, 3, bv);
  REQUIRE(r.best);
  CHECK(*r.best == Rational(3, 5));
  REQUIRE(r.witness);
  CHECK(verify_witness(*r.witness, MethodId::parse("bv")));
  CHECK_FALSE(r.budget_exhausted);

  SearchSpec party{4, 3, 3, 1, 10000, 1'000'000};
  auto d = search_lower_bound(MethodId::parse("dhondt"), ScenarioId::Party, 1, 2, party);
  REQUIRE(d.best);
  CHECK(*d.best == Rational(1, 3));

  SearchSpec tactic{5, 5, 3, 1, 10000, 1'000'000};
  auto s = search_lower_bound(MethodId::parse("sntv"), ScenarioId::Tactic, 2, 3, tactic);
  REQUIRE(s.best);
  CHECK(*s.best == Rational(3, 5));
}

TEST_CASE("search is deterministic and respects the budget") {
  SearchSpec spec{3, 2, 2, 2, 10000, 100000};
  auto a = search_lower_bound(MethodId::parse("av"), ScenarioId::Same, 1, 2, spec);
  auto b = search_lower_bound(MethodId::parse("av"), ScenarioId::Same, 1, 2, spec);
  CHECK(a.best == b.best);
  CHECK(a.evaluated == b.evaluated);
  REQUIRE(a.witness);
  CHECK(format_profile(a.witness->instance.profile) == format_profile(b.witness->instance.profile));

  SearchSpec tiny{4, 3, 3, 3, 10000, 5};
  auto c = search_lower_bound(MethodId::parse("av"), ScenarioId::EJR, 2, 3, tiny);
  CHECK(c.budget_exhausted);
  CHECK(c.evaluated <= 5);
}

TEST_CASE("search never beats an exact threshold") {
  SearchSpec spec{3, 2, 3, 2, 10000, 50000};
  for (const auto& [method, scen, ell, S] : std::vector<std::tuple<std::string, ScenarioId, int, int>>{
           {"av", ScenarioId::EJR, 1, 2},
           {"sntv", ScenarioId::Same, 1, 2},
           {"stl", ScenarioId::Party, 1, 2},
           {"phragmen-o", ScenarioId::WPSC, 1, 2},
           {"stv", ScenarioId::Same, 2, 2},
           {"thiele-opt", ScenarioId::EJR, 2, 2}}) {
    auto m = MethodId::parse(method);
    auto t = threshold(m, scen, ell, S);
    REQUIRE(t.exact());
    auto r = search_lower_bound(m, scen, ell, S, spec);
    if (r.best) CHECK(*r.best <= t.value);
  }
}

TEST_CASE("audit") {
  auto report = audit_table(default_scope(), 6);
  CHECK(report.ok());
  CHECK(report.checks > 1000);
  for (const auto& v : report.violations) MESSAGE(v.family << " " << v.method << " " << v.detail);

  auto searched = audit_table({MethodId::parse("dhondt"), MethodId::parse("sntv")}, 2, true);
  CHECK(searched.ok());
  CHECK(searched.searches > 0);
}
