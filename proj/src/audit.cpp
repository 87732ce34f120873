#include "pthresh/audit.hpp"

#include <functional>
#include <map>
#include <sstream>

#include "pthresh/errors.hpp"
#include "pthresh/thresholds.hpp"

namespace pthresh {

namespace {

struct Cell {
  bool present = false;
  ThresholdValue v;
};

Cell lookup(const MethodId& m, ScenarioId s, int ell, int S) {
  if (!supports(m, s)) return {};
  try {
    return {true, threshold(m, s, ell, S)};
  } catch (const DomainError&) {
    return {};
  }
}

std::string where(int ell, int S) { return "(" + std::to_string(ell) + "," + std::to_string(S) + ")"; }

class Auditor {
 public:
  Auditor(AuditReport& r, const MethodId& m) : r_(r), m_(m) {}

  // a <= b, refuted only when a's lower end exceeds b's upper end.
  void le(const std::string& family, const ThresholdValue& a, const ThresholdValue& b, const std::string& at) {
    ++r_.checks;
    if (a.lo > b.hi) fail(family, at + ": " + a.str() + " > " + b.str());
  }

  void check(bool ok, const std::string& family, const std::string& detail) {
    ++r_.checks;
    if (!ok) fail(family, detail);
  }

  void fail(const std::string& family, const std::string& detail) {
    r_.violations.push_back({family, m_.str(), detail});
  }

 private:
  AuditReport& r_;
  const MethodId& m_;
};

void audit_method(AuditReport& rep, const MethodId& m, int smax, bool search, const SearchSpec& coarse) {
  Auditor au(rep, m);
  const bool tactic = supports(m, ScenarioId::Tactic);
  for (int S = 1; S <= smax; ++S) {
    if (m.kind == MethodKind::LV && m.limit > S) continue;
    std::map<ScenarioId, std::vector<Cell>> pi;
    std::vector<ThresholdValue> hat(static_cast<std::size_t>(S + 1));
    for (auto s : {ScenarioId::Party, ScenarioId::Same, ScenarioId::Tactic, ScenarioId::PJR, ScenarioId::EJR,
                   ScenarioId::PSC, ScenarioId::WPSC}) {
      auto& row = pi[s];
      row.resize(static_cast<std::size_t>(S + 1));
      for (int ell = 1; ell <= S; ++ell) {
        if (s == ScenarioId::Tactic) {
          if (tactic) row[static_cast<std::size_t>(ell)] = {true, threshold_tactic_pi(m, ell, S)};
        } else {
          row[static_cast<std::size_t>(ell)] = lookup(m, s, ell, S);
        }
      }
    }
    if (tactic)
      for (int ell = 1; ell <= S; ++ell) hat[static_cast<std::size_t>(ell)] = threshold_hat(m, ell, S);

    auto at = [&](ScenarioId s, int ell) -> const Cell& { return pi[s][static_cast<std::size_t>(ell)]; };
    auto chain = [&](const std::string& fam, ScenarioId a, ScenarioId b, int ell) {
      if (at(a, ell).present && at(b, ell).present) au.le(fam, at(a, ell).v, at(b, ell).v, where(ell, S));
    };

    for (int ell = 1; ell <= S; ++ell) {
      const auto idx = static_cast<std::size_t>(ell);
      chain("party<=same", ScenarioId::Party, ScenarioId::Same, ell);
      chain("same<=pjr", ScenarioId::Same, ScenarioId::PJR, ell);
      chain("pjr<=ejr", ScenarioId::PJR, ScenarioId::EJR, ell);
      chain("same<=wpsc", ScenarioId::Same, ScenarioId::WPSC, ell);
      chain("wpsc<=psc", ScenarioId::WPSC, ScenarioId::PSC, ell);
      if (tactic) {
        au.le("hat<=pi", hat[idx], at(ScenarioId::Tactic, ell).v, where(ell, S));
        chain("tactic<=same", ScenarioId::Tactic, ScenarioId::Same, ell);
      }

      // Complementary pairs: seats left for W and for everyone else.
      const int other = S + 1 - ell;
      for (auto& [s, row] : pi) {
        const Cell& a = row[idx];
        const Cell& b = row[static_cast<std::size_t>(other)];
        if (a.present && b.present)
          au.check(a.v.hi + b.v.hi >= Rational(1), "complement>=1",
                   to_string(s) + " " + where(ell, S) + ": " + a.v.str() + " + " + b.v.str());
      }
      if (tactic)
        au.check(hat[idx].hi + hat[static_cast<std::size_t>(other)].hi >= Rational(1), "complement>=1",
                 "pi_hat " + where(ell, S));

      // Generic lower bounds from equal parties.
      for (const auto& gb : generic_bounds(ell, S)) {
        if (!gb.lower || gb.constraint.rfind("inf", 0) == 0) continue;
        for (auto& [s, row] : pi) {
          const Cell& c = row[idx];
          if (!c.present || s == ScenarioId::Tactic) continue;
          if (c.v.status == Status::Unknown && !c.v.note.empty() && c.v.note.rfind("no ballot", 0) == 0) continue;
          au.check(c.v.hi >= *gb.lower, "generic-lower",
                   to_string(s) + " " + where(ell, S) + ": " + c.v.str() + " < " + gb.lower->str());
        }
        if (tactic)
          au.check(hat[idx].hi >= *gb.lower, "generic-lower", "pi_hat " + where(ell, S));
      }

      if (tactic) {
        au.check(hat[idx].lo <= Rational(ell) * hat[1].hi, "hat-split", "pi_hat " + where(ell, S) + " > ell*pi_hat(1)");
        for (int k = 1; ell + k <= S; ++k)
          au.check(hat[static_cast<std::size_t>(ell + k)].lo <= hat[idx].hi + hat[static_cast<std::size_t>(k)].hi,
                   "hat-subadditive", "pi_hat(" + std::to_string(ell + k) + "," + std::to_string(S) + ")");
      }

      if (search && S <= 3 && m.has_engine()) {
        for (auto& [s, row] : pi) {
          const Cell& c = row[idx];
          if (!c.present || !c.v.exact() || s == ScenarioId::Tactic) continue;
          ++rep.searches;
          auto res = search_lower_bound(m, s, ell, S, coarse);
          if (res.best)
            au.check(*res.best <= c.v.value, "search<=threshold",
                     to_string(s) + " " + where(ell, S) + ": found " + res.best->str() + " > " + c.v.str());
        }
      }
    }
  }
}

}  // namespace

std::vector<MethodId> default_scope() {
  auto h = WeightScheme::harmonic();
  std::vector<MethodId> out{MethodId::div(Rational(1)),         MethodId::div(Rational(1, 2)),
                            MethodId::div(Rational(0)),         MethodId::quota(Rational(0)),
                            MethodId::quota(Rational(1)),       MethodId::quota(Rational(1, 2)),
                            MethodId::plain(MethodKind::BV),    MethodId::plain(MethodKind::AV),
                            MethodId::plain(MethodKind::SNTV),  MethodId::lv(1),
                            MethodId::lv(2),                    MethodId::lv(3),
                            MethodId::plain(MethodKind::CV),    MethodId::plain(MethodKind::CVq),
                            MethodId::plain(MethodKind::PhragmenU),
                            MethodId::weighted(MethodKind::ThieleOpt, h),
                            MethodId::weighted(MethodKind::ThieleOpt, WeightScheme::weak()),
                            MethodId::weighted(MethodKind::ThieleAdd, h),
                            MethodId::weighted(MethodKind::ThieleAdd, WeightScheme::weak()),
                            MethodId::plain(MethodKind::ThieleElim),
                            MethodId::stv(Rational(0)),         MethodId::stv(Rational(1)),
                            MethodId::plain(MethodKind::PhragmenO),
                            MethodId::plain(MethodKind::ThieleO),
                            MethodId::weighted(MethodKind::Borda, h),
                            MethodId::weighted(MethodKind::Borda, WeightScheme::constant())};
  return out;
}

AuditReport audit_table(const std::vector<MethodId>& scope, int smax, bool search, const SearchSpec& coarse) {
  if (smax < 1) throw DomainError("smax must be positive");
  AuditReport rep;
  for (const auto& m : scope) audit_method(rep, m, smax, search, coarse);
  return rep;
}

}  // namespace pthresh
