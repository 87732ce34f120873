#include <doctest.h>

#include <random>

#include "goldens.hpp"
#include "pthresh/errors.hpp"
#include "pthresh/sequences.hpp"
#include "pthresh/thresholds.hpp"

using namespace pthresh;

namespace {

MethodId M(const std::string& s) { return MethodId::parse(s); }

ThresholdValue T(const std::string& m, ScenarioId s, int ell, int S) { return threshold(M(m), s, ell, S); }

}  // namespace

TEST_CASE("published grids") {
  for (const auto& g : goldens::tables()) {
    CAPTURE(g.table);
    auto grid = threshold_table(g.table, 5);
    REQUIRE(grid.size() == 5);
    for (int S = 1; S <= 5; ++S)
      for (int ell = 1; ell <= S; ++ell) {
        CAPTURE(S);
        CAPTURE(ell);
        const auto& cell = grid[static_cast<std::size_t>(S - 1)][static_cast<std::size_t>(ell - 1)];
        CHECK(cell.value == Rational::parse(g.rows[static_cast<std::size_t>(S - 1)][static_cast<std::size_t>(ell - 1)]));
        if (g.table == "tha-same" && ell >= 2) {
          CHECK(cell.status == Status::LowerBound);
          CHECK(cell.conjectured);
        } else {
          CHECK(cell.exact());
        }
      }
  }
  CHECK_THROWS(threshold_table("nope"));
}

TEST_CASE("thiele addition single seat cells follow alpha") {
  for (int S = 1; S <= 6; ++S) {
    auto t = T("thiele-add", ScenarioId::Same, 1, S);
    CHECK(t.exact());
    CHECK(t.value == Rational(1) / (Rational(1) + alpha(S)));
  }
  CHECK(T("thiele-add", ScenarioId::Same, 1, 5).value.decimal(3) == "0.193");
}

TEST_CASE("headline examples") {
  CHECK(T("dhondt", ScenarioId::Party, 2, 5).value == Rational(1, 3));
  CHECK(T("stl", ScenarioId::Party, 2, 3).value == Rational(3, 5));
  CHECK(T("hare", ScenarioId::Party, 2, 4).value == Rational(7, 16));
  CHECK(T("bv", ScenarioId::EJR, 2, 3).value == Rational(3, 5));
  CHECK(T("av", ScenarioId::EJR, 3, 5).value == Rational(5, 8));
  CHECK(T("thiele-add", ScenarioId::Same, 1, 3).value == Rational(3, 11));
  auto tho = T("thiele-o", ScenarioId::Tactic, 1, 3);
  CHECK(tho.value == Rational(12, 35));
  CHECK(tho.kind == ValueKind::PiHat);
  CHECK(T("thiele-o", ScenarioId::WPSC, 3, 5).value == Rational(48, 71));
  CHECK(T("borda", ScenarioId::Same, 2, 5).value == Rational(25, 49));
  CHECK(T("cvq", ScenarioId::Same, 1, 3).value == 1);
  CHECK(T("thiele-opt:weak", ScenarioId::Same, 2, 4).value == 1);
  auto lv = T("lv:2", ScenarioId::Tactic, 1, 4);
  CHECK(lv.value == Rational(1, 3));
  CHECK(lv.kind == ValueKind::PiHat);
  for (int S = 1; S <= 5; ++S)
    for (int ell = 1; ell <= S; ++ell) CHECK(T("phragmen-o", ScenarioId::WPSC, ell, S).value == Rational(ell, S + 1));
}

TEST_CASE("large electorate and finite tactic forms") {
  auto hat = threshold_hat(M("sntv"), 2, 3);
  CHECK(hat.value == Rational(1, 2));
  auto pi = threshold_tactic_pi(M("sntv"), 2, 3);
  CHECK(pi.lo == Rational(3, 5));
  CHECK_FALSE(pi.exact());
  CHECK(hat.value <= pi.lo);
}

TEST_CASE("open cells stay open") {
  auto ejr = T("phragmen", ScenarioId::EJR, 2, 12);
  CHECK_FALSE(ejr.exact());
  CHECK(ejr.lo >= Rational(409, 2409));
  CHECK(T("thiele-add", ScenarioId::Tactic, 1, 3).value == Rational(3, 11));
  CHECK(T("thiele-add", ScenarioId::Tactic, 2, 3).status == Status::Unknown);
  CHECK_FALSE(T("thiele-add", ScenarioId::EJR, 2, 3).exact());
  CHECK_FALSE(T("thiele-elim", ScenarioId::PJR, 1, 3).exact());
}

TEST_CASE("argument checks") {
  CHECK_THROWS_AS(T("dhondt", ScenarioId::Party, 0, 3), DomainError);
  CHECK_THROWS_AS(T("dhondt", ScenarioId::Party, 4, 3), DomainError);
  CHECK_THROWS_AS(T("dhondt", ScenarioId::EJR, 1, 3), UnsupportedError);
  CHECK_THROWS_AS(T("av", ScenarioId::PSC, 1, 3), UnsupportedError);
  CHECK_FALSE(supports(M("stv"), ScenarioId::EJR));
  CHECK(supports(M("stv"), ScenarioId::PSC));
}

TEST_CASE("divisor formula over random gamma") {
  std::mt19937_64 rng(0x9a33a);
  std::uniform_int_distribution<int> num(1, 12), S_(1, 8);
  for (int it = 0; it < 500; ++it) {
    int d = num(rng);
    Rational g(std::uniform_int_distribution<int>(1, d)(rng), d);
    int S = S_(rng), ell = std::uniform_int_distribution<int>(1, S)(rng);
    Rational expect = (Rational(ell - 1) + g) / (Rational(ell - 1) + g * Rational(S + 2 - ell));
    CHECK(threshold(MethodId::div(g), ScenarioId::Party, ell, S).value == expect);
  }
}

TEST_CASE("generic bounds") {
  auto has_lower = [](const std::vector<GenericBound>& v, const Rational& r) {
    for (const auto& b : v)
      if (b.lower && *b.lower == r) return true;
    return false;
  };
  CHECK(has_lower(generic_bounds(1, 4), Rational(1, 5)));
  CHECK(has_lower(generic_bounds(2, 3), Rational(1, 2)));
  bool inf = false;
  for (const auto& b : generic_bounds(3, 5))
    if (b.constraint.find("inf") != std::string::npos && b.lower == Rational(1, 2)) inf = true;
  CHECK(inf);
  CHECK(generic_lower(2, 5) == Rational(1, 3));
  CHECK(generic_lower(1, 4) == Rational(1, 5));
}

TEST_CASE("criteria") {
  CHECK(criterion_check(M("thiele-add"), Criterion::JR, 5) == Verdict::Yes);
  CHECK(criterion_check(M("thiele-add"), Criterion::JR, 6) == Verdict::No);
  CHECK(criterion_check(M("bv"), Criterion::JR, 3) == Verdict::No);
  for (int S = 1; S <= 5; ++S) CHECK(criterion_check(M("thiele-opt"), Criterion::EJR, S) == Verdict::Yes);
  CHECK(criterion_check(M("thiele-add"), Criterion::EJR, 4) == Verdict::Unknown);
  CHECK(parse_criterion("wpsc-floor") == Criterion::WPSCFloor);
  CHECK_THROWS_AS(parse_criterion("sjr"), ParseError);
}

TEST_CASE("block vote EJR rises then falls") {
  for (int S = 1; S <= 12; ++S) {
    int peak = (S + 2) / 2;  // ceil((S+1)/2)
    for (int ell = 2; ell <= S; ++ell) {
      auto prev = T("bv", ScenarioId::EJR, ell - 1, S).value;
      auto cur = T("bv", ScenarioId::EJR, ell, S).value;
      if (ell <= peak) CHECK(prev <= cur);
      else CHECK(prev >= cur);
    }
    CHECK(T("bv", ScenarioId::EJR, 1, S).value == Rational(1, 2));
    CHECK(T("bv", ScenarioId::EJR, S, S).value == Rational(1, 2));
  }
}

TEST_CASE("closure rules on the corpus") {
  const std::vector<std::string> methods{"dhondt", "stl", "hare", "droop", "bv", "av", "sntv", "lv:2", "cvq",
                                         "phragmen", "thiele-opt", "thiele-add", "stv", "phragmen-o",
                                         "thiele-o", "borda"};
  for (const auto& name : methods) {
    auto m = M(name);
    for (int S = 1; S <= 8; ++S)
      for (int ell = 1; ell <= S; ++ell)
        for (auto s : {ScenarioId::Party, ScenarioId::Same, ScenarioId::PJR, ScenarioId::EJR, ScenarioId::PSC,
                       ScenarioId::WPSC}) {
          if (!supports(m, s) || (m.kind == MethodKind::LV && m.limit > S)) continue;
          auto a = threshold(m, s, ell, S), b = threshold(m, s, S + 1 - ell, S);
          CAPTURE(name);
          CAPTURE(S);
          CAPTURE(ell);
          if (a.exact() && b.exact()) CHECK(a.value + b.value >= 1);
          if (a.exact()) CHECK(a.value >= generic_lower(ell, S));
          CHECK(a.lo <= a.hi);
          CHECK(a.value >= 0);
          CHECK(a.value <= 1);
        }
  }
}

TEST_CASE("large electorate split rule") {
  for (const auto& name : {"sntv", "lv:2", "thiele-o", "borda"}) {
    auto m = M(name);
    for (int S = 1; S <= 8; ++S) {
      if (m.kind == MethodKind::LV && m.limit > S) continue;
      if (threshold_hat(m, 1, S).value <= Rational(1, S + 1))
        for (int ell = 1; ell <= S; ++ell) CHECK(threshold_hat(m, ell, S).value == Rational(ell, S + 1));
      for (int l = 1; l <= S; ++l)
        for (int k = 1; l + k <= S; ++k) {
          auto a = threshold_hat(m, l, S), b = threshold_hat(m, k, S), c = threshold_hat(m, l + k, S);
          if (a.exact() && b.exact() && c.exact()) CHECK(c.value <= a.value + b.value);
        }
    }
  }
}
