#include "pthresh/thresholds.hpp"

#include <algorithm>
#include <functional>
#include <set>

#include "pthresh/errors.hpp"
#include "pthresh/sequences.hpp"

namespace pthresh {

std::string to_string(Side s) {
  switch (s) {
    case Side::Plus: return "+";
    case Side::Minus: return "-";
    case Side::Unspecified: return "";
  }
  return "";
}

std::string to_string(ValueKind k) { return k == ValueKind::Pi ? "pi" : "pi_hat"; }

std::string to_string(Status s) {
  switch (s) {
    case Status::Exact: return "exact";
    case Status::LowerBound: return "lower_bound";
    case Status::UpperBound: return "upper_bound";
    case Status::Interval: return "interval";
    case Status::Unknown: return "unknown";
  }
  return "?";
}

std::string ThresholdValue::str() const {
  switch (status) {
    case Status::Exact: return value.str() + to_string(side);
    case Status::LowerBound: return ">=" + value.str() + (conjectured ? "?" : "");
    case Status::UpperBound: return "<=" + value.str();
    case Status::Interval: return "[" + lo.str() + "," + hi.str() + "]";
    case Status::Unknown: return "?";
  }
  return "?";
}

namespace {

using TV = ThresholdValue;

TV exact(Rational v, std::string src, Side side = Side::Unspecified, ValueKind k = ValueKind::Pi) {
  TV t;
  t.value = v;
  t.lo = v;
  t.hi = v;
  t.side = side;
  t.kind = k;
  t.status = Status::Exact;
  t.source = std::move(src);
  return t;
}

TV lower(Rational v, std::string src, bool conjectured = false) {
  TV t;
  t.value = v;
  t.lo = v;
  t.status = Status::LowerBound;
  t.conjectured = conjectured;
  t.source = std::move(src);
  return t;
}

TV interval(Rational lo, Rational hi, std::string src) {
  TV t;
  t.value = lo;
  t.lo = std::move(lo);
  t.hi = std::move(hi);
  t.status = t.lo == t.hi ? Status::Exact : Status::Interval;
  if (t.exact()) t.value = t.lo;
  t.source = std::move(src);
  return t;
}

TV unknown(std::string note, Rational lo = Rational(0), Rational hi = Rational(1)) {
  TV t;
  t.value = lo;
  t.lo = std::move(lo);
  t.hi = std::move(hi);
  t.status = Status::Unknown;
  t.note = std::move(note);
  return t;
}

// Tighten an entry with a proved enclosure [lo, hi].
TV refine(TV t, const Rational& lo, const Rational& hi, const std::string& src) {
  if (t.exact()) return t;
  Rational nlo = max(t.lo, lo), nhi = min(t.hi, hi);
  if (nlo == nhi) {
    TV e = exact(nlo, src, Side::Unspecified, t.kind);
    e.note = t.note;
    return e;
  }
  if (nlo == t.lo && nhi == t.hi) return t;
  t.lo = nlo;
  t.hi = nhi;
  if (t.status == Status::LowerBound && nhi < Rational(1)) t.status = Status::Interval;
  if (t.status == Status::Unknown || t.status == Status::UpperBound) {
    if (t.status == Status::UpperBound && nlo.sign() > 0) t.status = Status::Interval;
  }
  if (t.status == Status::LowerBound) t.value = nlo;
  return t;
}

Rational R(long n) { return Rational(n); }
Rational ratio(long a, long b) { return Rational(a, b); }
Rational optimal(int ell, int S) { return ratio(ell, S + 1); }

std::optional<Rational> alpha_or_none(int n, const WeightScheme& w) {
  if (n > kAlphaCap) return std::nullopt;
  return alpha(n, w);
}

bool in_range(int ell, int S) { return S >= 1 && ell >= 1 && ell <= S; }

std::set<ScenarioId> scenario_set(BallotKind k) {
  switch (k) {
    case BallotKind::Party: return {ScenarioId::Party};
    case BallotKind::Unordered:
      return {ScenarioId::Party, ScenarioId::Same, ScenarioId::Tactic, ScenarioId::PJR, ScenarioId::EJR};
    case BallotKind::Ordered:
      return {ScenarioId::Party, ScenarioId::Same, ScenarioId::Tactic, ScenarioId::PSC, ScenarioId::WPSC};
  }
  return {};
}

// Tactic headline is the large-electorate value for these methods.
bool hat_headline(const MethodId& m) {
  switch (m.kind) {
    case MethodKind::SNTV:
    case MethodKind::LV:
    case MethodKind::CV:
    case MethodKind::STV:
    case MethodKind::ThieleO:
    case MethodKind::Borda: return true;
    case MethodKind::ThieleOpt: return !m.weights.is_harmonic() && !m.weights.is_constant();
    case MethodKind::ThieleAdd: return m.weights.is_weak();
    default: return false;
  }
}

MethodId canonical(const MethodId& m) {
  // Constant-weight Thiele methods are approval voting.
  if ((m.kind == MethodKind::ThieleOpt || m.kind == MethodKind::ThieleAdd) && m.weights.is_constant())
    return MethodId::plain(MethodKind::AV);
  if (m.kind == MethodKind::LV && m.limit >= 1) return m;
  return m;
}

bool weights_below_harmonic(const WeightScheme& w) {
  if (w.is_harmonic() || w.is_weak()) return true;
  if (w.kind() != WeightScheme::Kind::Explicit) return false;
  for (std::size_t k = 1; k <= w.head().size(); ++k)
    if (w.head()[k - 1] > Rational(1, static_cast<long>(k))) return false;
  return w.tail().is_zero();
}

Rational lv_hat(int L, int ell, int S) {
  long a = static_cast<long>(ell) * std::min(L, S + 1 - ell);
  long b = static_cast<long>(S + 1 - ell) * std::min(L, ell);
  return ratio(a, a + b);
}

Rational lv_ejr(int L, int ell, int S) {
  if (2 * ell <= S + 1) return ratio(L, S + L + 1 - ell);
  return ratio(S + L + 1 - 2 * ell, 2 * S + L + 2 - 3 * ell);
}

Rational borda_bar(const WeightScheme& w, int k) { return w.psi(k) / R(k); }

// Scenarios other than Tactic.
TV base(const MethodId& m, ScenarioId s, int ell, int S) {
  const Rational opt = optimal(ell, S);
  switch (m.kind) {
    case MethodKind::Div: {
      const Rational& g = m.param;
      if (g.is_zero()) {
        if (ell == 1) return unknown("Adams' method is ill-defined when parties outnumber seats");
        return exact(R(1), "divisor-party");
      }
      return exact((R(ell - 1) + g) / (R(ell - 1) + g * R(S + 2 - ell)), "divisor-party");
    }
    case MethodKind::Quota:
    case MethodKind::STV: {
      const Rational& d = m.param;
      Rational v = (R(static_cast<long>(ell) * (S + 2 - ell) - 1) + d) / ((R(S) + d) * R(S + 2 - ell));
      return exact(v, m.kind == MethodKind::Quota ? "quota-party" : "stv-quota");
    }
    case MethodKind::BV:
    case MethodKind::AV:
      if (s == ScenarioId::EJR) {
        int L = m.kind == MethodKind::BV ? S : S + ell;  // approval has no cap
        if (m.kind == MethodKind::AV) return exact(ratio(S, 2 * S + 1 - ell), "approval-ejr");
        return exact(lv_ejr(L, ell, S), "block-ejr");
      }
      return exact(ratio(1, 2), "majority-list");
    case MethodKind::SNTV:
      if (ell == 1) return exact(ratio(1, S + 1), "single-vote");
      return unknown("no ballot can name " + std::to_string(ell) + " candidates");
    case MethodKind::LV: {
      const int L = m.limit;
      if (ell > L) return unknown("no ballot can name " + std::to_string(ell) + " candidates");
      Rational same = lv_hat(L, ell, S);
      if (s == ScenarioId::EJR) return exact(lv_ejr(L, ell, S), "limited-ejr");
      if (s == ScenarioId::Party) return interval(generic_lower(ell, S), same, "limited-party");
      return exact(same, "limited-vote");
    }
    case MethodKind::CV: return unknown("not determined for cumulative voting");
    case MethodKind::CVq: return exact(R(1), "self-vote-tie");
    case MethodKind::PhragmenU:
      if (s == ScenarioId::EJR) {
        if (ell == 1) return exact(ratio(1, S + 1), "phragmen-load");
        Rational lo = opt;
        if (ell == 2 && S == 12) lo = max(lo, ratio(409, 2409));
        return unknown("open problem", lo);
      }
      return exact(opt, s == ScenarioId::Party ? "dhondt-reduction" : "phragmen-load");
    case MethodKind::ThieleOpt: {
      const WeightScheme& w = m.weights;
      if (w.is_harmonic()) return exact(opt, s == ScenarioId::Party ? "dhondt-reduction" : "satisfaction-max");
      if (s == ScenarioId::Party) return unknown("not determined for non-harmonic weights");
      if (ell == 1) {
        Rational best(0);
        for (int k = 1; k <= S; ++k) best = max(best, R(k) * w.w(k));
        return exact(Rational(1) / (Rational(1) + R(S) / best), "optimisation-jr");
      }
      Rational b = Rational(1) / (w.w(ell) * R(S + 1 - ell) + Rational(1));
      if (b == Rational(1)) return exact(b, "optimisation-two-blocks");
      return lower(b, "optimisation-two-blocks");
    }
    case MethodKind::ThieleAdd: {
      const WeightScheme& w = m.weights;
      if (s == ScenarioId::Party) {
        if (w.is_harmonic()) return exact(opt, "dhondt-reduction");
        return unknown("not determined for non-harmonic weights");
      }
      if (ell == 1) {
        if (auto a = alpha_or_none(S, w)) return exact(Rational(1) / (Rational(1) + *a), "addition-lp");
        return interval(ratio(1, S + 1), Rational(1) / (Rational(1) + R(S) / w.psi(S)), "addition-lp-bounds");
      }
      const Rational wl = w.w(ell);
      if (wl.is_zero()) return exact(R(1), "addition-zero-weight");
      const int n = S + 1 - ell;
      Rational b;
      if (auto a = alpha_or_none(n, w)) b = Rational(1) / (Rational(1) + wl * *a);
      else b = Rational(1) / (Rational(1) + wl * R(n));
      if (s == ScenarioId::EJR) {
        TV t = unknown("open problem", b);
        t.source = "addition-lp";
        return t;
      }
      return lower(b, "addition-lp", w.is_harmonic());
    }
    case MethodKind::ThieleElim:
      if (s == ScenarioId::PJR || s == ScenarioId::EJR) {
        if (ell == 1) {
          Rational best(0);
          for (int k = 1; k <= S; ++k) best = max(best, ratio(k, static_cast<long>(k) * k + S));
          TV t = lower(best, "elimination-chain");
          t.note = "open problem";
          return t;
        }
        return unknown("open problem", opt);
      }
      return exact(opt, s == ScenarioId::Party ? "dhondt-reduction" : "elimination-score");
    case MethodKind::PhragmenO:
      if (s == ScenarioId::PSC) return exact(R(1), "own-first-ballots", Side::Minus);
      return exact(opt, s == ScenarioId::Party ? "dhondt-reduction" : "ordered-load");
    case MethodKind::ThieleO: {
      const Rational an = seq_a(S + 1 - ell);
      switch (s) {
        case ScenarioId::Party: return exact(opt, "dhondt-reduction");
        case ScenarioId::PSC: return exact(R(1), "own-first-ballots", Side::Minus);
        case ScenarioId::Same: return exact(R(ell) / (R(ell) + an), "ordered-thiele-b");
        case ScenarioId::WPSC: return exact(R(seq_c(ell)) / (R(seq_c(ell)) + an), "ordered-thiele-c");
        default: break;
      }
      break;
    }
    case MethodKind::Borda: {
      const WeightScheme& w = m.weights;
      switch (s) {
        case ScenarioId::Party:
          if (w.is_harmonic()) return exact(opt, "dhondt-reduction");
          return unknown("not determined for non-harmonic weights");
        case ScenarioId::PSC: return unknown("not determined");
        case ScenarioId::Same: {
          Rational b = borda_bar(w, S + 1 - ell);
          return exact(b / (w.w(ell) + b), "positional-mean");
        }
        case ScenarioId::WPSC: {
          // Names after A on W's ballots still score, so only same <= wpsc is proved.
          Rational b = borda_bar(w, S + 1 - ell);
          TV t = lower(b / (w.w(ell) + b), "positional-mean");
          t.note = "W ballots continuing past A can raise this";
          return t;
        }
        default: break;
      }
      break;
    }
  }
  throw UnsupportedError("no threshold for " + m.str() + " / " + to_string(s));
}

TV base_tactic_pi(const MethodId& m, int ell, int S) {
  const Rational opt = optimal(ell, S);
  switch (m.kind) {
    case MethodKind::BV:
    case MethodKind::AV: return exact(ratio(1, 2), "majority-list");
    case MethodKind::SNTV:
      if (ell == 1) return exact(ratio(1, S + 1), "single-vote");
      // Three W votes out of five cannot be split evenly over two names.
      if (ell == 2 && S == 3) return lower(ratio(3, 5), "small-electorate");
      return unknown("open");
    case MethodKind::LV:
      if (ell <= m.limit) return exact(lv_hat(m.limit, ell, S), "limited-vote");
      return unknown("open");
    case MethodKind::CV: {
      TV t = exact(opt, "equal-split");
      t.note = "ideal version allowing an exact equal split";
      return t;
    }
    case MethodKind::PhragmenU: return exact(opt, "phragmen-load");
    case MethodKind::ThieleOpt:
      if (m.weights.is_harmonic()) return exact(opt, "satisfaction-max");
      return unknown("open");
    case MethodKind::ThieleAdd:
      if (ell == 1) return base(m, ScenarioId::Same, 1, S);
      return unknown("open problem");
    case MethodKind::ThieleElim: return exact(opt, "elimination-score");
    case MethodKind::PhragmenO: return exact(opt, "ordered-load");
    default: return unknown("open");
  }
}

TV base_hat(const MethodId& m, int ell, int S) {
  const Rational opt = optimal(ell, S);
  TV t;
  switch (m.kind) {
    case MethodKind::SNTV:
    case MethodKind::CV:
    case MethodKind::STV: t = exact(opt, "split-votes"); break;
    case MethodKind::LV: t = exact(lv_hat(m.limit, ell, S), "limited-vote"); break;
    case MethodKind::ThieleO: {
      Rational a = seq_a(ell), b = seq_a(S + 1 - ell);
      t = exact(a / (a + b), "ordered-thiele-b");
      break;
    }
    case MethodKind::Borda: {
      Rational a = borda_bar(m.weights, ell), b = borda_bar(m.weights, S + 1 - ell);
      t = exact(b / (a + b), "positional-mean");
      break;
    }
    case MethodKind::ThieleOpt:
      if (weights_below_harmonic(m.weights)) {
        t = exact(opt, "split-votes");
        break;
      }
      t = unknown("open");
      break;
    default: t = unknown("open"); break;
  }
  t.kind = ValueKind::PiHat;
  return t;
}

void check_args(const MethodId& m, int ell, int S) {
  if (!in_range(ell, S)) throw DomainError("need 1 <= ell <= S");
  if (m.kind == MethodKind::LV && (m.limit < 1 || m.limit > S)) throw DomainError("limited vote needs 1 <= L <= S");
  if ((m.kind == MethodKind::Div || m.kind == MethodKind::Quota || m.kind == MethodKind::STV) &&
      (m.param.sign() < 0 || m.param > Rational(1)))
    throw UnsupportedError("thresholds are proved for parameters in [0,1]");
}

TV same_or_none(const MethodId& m, int ell, int S, bool& have) {
  have = supports(m, ScenarioId::Same);
  if (!have) return unknown("");
  return base(m, ScenarioId::Same, ell, S);
}

// pi_tactic refined by pi_hat <= pi_tactic <= pi_same.
TV tactic_pi_stage(const MethodId& m, int ell, int S, const TV& hat) {
  TV t = base_tactic_pi(m, ell, S);
  bool have = false;
  TV same = same_or_none(m, ell, S, have);
  Rational hi = have ? same.hi : Rational(1);
  return refine(t, hat.lo, hi, "sandwich");
}

TV hat_final(const MethodId& m, int ell, int S) {
  TV hat = base_hat(m, ell, S);
  TV pi1 = tactic_pi_stage(m, 1, S, base_hat(m, 1, S));
  if (!hat.exact() && pi1.hi <= ratio(1, S + 1)) {
    TV e = exact(optimal(ell, S), "split-votes", Side::Unspecified, ValueKind::PiHat);
    return e;
  }
  TV pi = tactic_pi_stage(m, ell, S, hat);
  hat = refine(hat, Rational(0), pi.hi, "below-pi");
  hat.kind = ValueKind::PiHat;
  return hat;
}

}  // namespace

Rational generic_lower(int ell, int S) { return ratio(1, S / ell + 1); }

std::vector<GenericBound> generic_bounds(int ell, int S) {
  if (!in_range(ell, S)) throw DomainError("need 1 <= ell <= S");
  std::vector<GenericBound> out;
  if (ell == 1) out.push_back({"pi(1,S) >= 1/(S+1)", ratio(1, S + 1), "equal-singletons"});
  if ((S + 1) % ell == 0) out.push_back({"pi(l,S) >= l/(S+1)", ratio(ell, S + 1), "equal-parties"});
  out.push_back({"pi(l,S) >= 1/(floor(S/l)+1)", generic_lower(ell, S), "equal-parties"});
  out.push_back({"pi(l,S) + pi(S+1-l,S) >= 1", std::nullopt, "seat-count"});
  if (2 * ell >= S + 1) out.push_back({"inf over methods of pi(l,S) = 1/2", ratio(1, 2), "seat-count"});
  return out;
}

bool supports(const MethodId& m, ScenarioId s) {
  auto set = scenario_set(m.ballot_kind());
  return set.count(s) > 0;
}

ThresholdValue threshold_tactic_pi(const MethodId& mi, int ell, int S) {
  MethodId m = canonical(mi);
  check_args(m, ell, S);
  if (!supports(m, ScenarioId::Tactic)) throw UnsupportedError("tactic scenario needs ordered or unordered ballots");
  TV hat = hat_final(m, ell, S);
  TV t = tactic_pi_stage(m, ell, S, hat);
  t.kind = ValueKind::Pi;
  return t;
}

ThresholdValue threshold_hat(const MethodId& mi, int ell, int S) {
  MethodId m = canonical(mi);
  check_args(m, ell, S);
  if (!supports(m, ScenarioId::Tactic)) throw UnsupportedError("tactic scenario needs ordered or unordered ballots");
  return hat_final(m, ell, S);
}

ThresholdValue threshold(const MethodId& mi, ScenarioId s, int ell, int S) {
  MethodId m = canonical(mi);
  check_args(m, ell, S);
  if (!supports(m, s))
    throw UnsupportedError("scenario " + to_string(s) + " does not apply to " + to_string(m.ballot_kind()) + " ballots");
  if (s == ScenarioId::Tactic) return hat_headline(m) ? threshold_hat(m, ell, S) : threshold_tactic_pi(m, ell, S);
  return base(m, s, ell, S);
}

Criterion parse_criterion(const std::string& text) {
  for (auto c : {Criterion::JR, Criterion::PJR, Criterion::EJR, Criterion::DPC, Criterion::PSCStrong,
                 Criterion::WPSCFloor})
    if (to_string(c) == text) return c;
  throw ParseError("unknown criterion '" + text + "'");
}

std::string to_string(Criterion c) {
  switch (c) {
    case Criterion::JR: return "jr";
    case Criterion::PJR: return "pjr";
    case Criterion::EJR: return "ejr";
    case Criterion::DPC: return "dpc";
    case Criterion::PSCStrong: return "psc-strong";
    case Criterion::WPSCFloor: return "wpsc-floor";
  }
  return "?";
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::Yes: return "true";
    case Verdict::No: return "false";
    case Verdict::Unknown: return "unknown";
  }
  return "?";
}

Verdict criterion_check(const MethodId& mi, Criterion c, int S) {
  MethodId m = canonical(mi);
  const BallotKind k = m.ballot_kind();
  ScenarioId s = ScenarioId::Party;
  bool floor_form = true;  // pi < ell/S (or = with side -); otherwise pi <= ell/(S+1)
  int ell_max = S;
  switch (c) {
    case Criterion::JR:
    case Criterion::PJR:
    case Criterion::EJR:
      if (k == BallotKind::Ordered) throw UnsupportedError("JR-type criteria need unordered or party ballots");
      s = k == BallotKind::Party ? ScenarioId::Party : (c == Criterion::EJR ? ScenarioId::EJR : ScenarioId::PJR);
      if (c == Criterion::JR) ell_max = 1;
      break;
    case Criterion::DPC:
    case Criterion::PSCStrong:
    case Criterion::WPSCFloor:
      if (k == BallotKind::Unordered) throw UnsupportedError("solid-coalition criteria need ordered or party ballots");
      s = k == BallotKind::Party ? ScenarioId::Party : (c == Criterion::WPSCFloor ? ScenarioId::WPSC : ScenarioId::PSC);
      floor_form = c != Criterion::DPC;
      break;
  }
  bool unknown_seen = false;
  for (int ell = 1; ell <= ell_max; ++ell) {
    TV t = threshold(m, s, ell, S);
    const Rational bound = floor_form ? ratio(ell, S) : ratio(ell, S + 1);
    auto holds = [&](const Rational& v, Side side) {
      if (floor_form) return v < bound || (v == bound && side == Side::Minus);
      return v <= bound;
    };
    if (t.exact()) {
      if (!holds(t.value, t.side)) return Verdict::No;
      continue;
    }
    if (!holds(t.lo, Side::Plus)) return Verdict::No;
    if (holds(t.hi, Side::Unspecified)) continue;
    unknown_seen = true;
  }
  return unknown_seen ? Verdict::Unknown : Verdict::Yes;
}

std::vector<std::string> table_names() {
  return {"optimal", "stl", "lr", "bv-ejr", "av-ejr", "tha-same", "tho-tactic", "tho-same", "tho-wpsc",
          "borda-tactic", "borda-same", "sequences"};
}

std::vector<std::vector<ThresholdValue>> threshold_table(const std::string& name, int smax) {
  std::function<TV(int, int)> cell;
  auto h = WeightScheme::harmonic();
  if (name == "optimal") cell = [](int l, int s) { return threshold(MethodId::div(Rational(1)), ScenarioId::Party, l, s); };
  else if (name == "stl") cell = [](int l, int s) { return threshold(MethodId::div(Rational(1, 2)), ScenarioId::Party, l, s); };
  else if (name == "lr") cell = [](int l, int s) { return threshold(MethodId::quota(Rational(0)), ScenarioId::Party, l, s); };
  else if (name == "bv-ejr") cell = [](int l, int s) { return threshold(MethodId::plain(MethodKind::BV), ScenarioId::EJR, l, s); };
  else if (name == "av-ejr") cell = [](int l, int s) { return threshold(MethodId::plain(MethodKind::AV), ScenarioId::EJR, l, s); };
  else if (name == "tha-same") cell = [h](int l, int s) { return threshold(MethodId::weighted(MethodKind::ThieleAdd, h), ScenarioId::Same, l, s); };
  else if (name == "tho-tactic") cell = [](int l, int s) { return threshold_hat(MethodId::plain(MethodKind::ThieleO), l, s); };
  else if (name == "tho-same") cell = [](int l, int s) { return threshold(MethodId::plain(MethodKind::ThieleO), ScenarioId::Same, l, s); };
  else if (name == "tho-wpsc") cell = [](int l, int s) { return threshold(MethodId::plain(MethodKind::ThieleO), ScenarioId::WPSC, l, s); };
  else if (name == "borda-tactic") cell = [h](int l, int s) { return threshold_hat(MethodId::weighted(MethodKind::Borda, h), l, s); };
  else if (name == "borda-same") cell = [h](int l, int s) { return threshold(MethodId::weighted(MethodKind::Borda, h), ScenarioId::Same, l, s); };
  else throw ParseError("unknown table '" + name + "'");
  std::vector<std::vector<TV>> rows;
  for (int s = 1; s <= smax; ++s) {
    std::vector<TV> row;
    for (int l = 1; l <= s; ++l) row.push_back(cell(l, s));
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace pthresh
