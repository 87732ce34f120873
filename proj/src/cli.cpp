#include "pthresh/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <functional>
#include <sstream>

#include "pthresh/audit.hpp"
#include "pthresh/errors.hpp"
#include "pthresh/party_methods.hpp"
#include "pthresh/profile_io.hpp"
#include "pthresh/search.hpp"
#include "pthresh/sequences.hpp"
#include "pthresh/thresholds.hpp"
#include "pthresh/unordered_methods.hpp"
#include "pthresh/witness.hpp"

namespace pthresh {

namespace {

using json = nlohmann::ordered_json;

struct Globals {
  std::string format = "human";
  std::size_t branch_cap = CountOptions{}.branch_cap;
  int decimals = -1;
  bool dump_lp = false;
};

// Signals a non-zero exit after output has been written.
struct Exit {
  int code;
};

class Out {
 public:
  Out(const Globals& g, std::ostream& os) : g_(g), os_(os) {}

  json rat(const Rational& r) const { return r.str(); }

  // Rational as "p/q", with an approximation when --decimals is given.
  std::string show(const Rational& r) const {
    if (g_.decimals < 0) return r.str();
    return r.str() + " (" + r.decimal(g_.decimals) + ")";
  }

  void add_decimal(json& j, const std::string& key, const Rational& r) const {
    if (g_.decimals >= 0) j[key + "_decimal"] = r.decimal(g_.decimals);
  }

  void emit(const json& doc, const std::function<void(std::ostream&)>& human,
            const std::function<void(std::ostream&)>& csv = {}) {
    if (g_.format == "json") os_ << doc.dump(2) << "\n";
    else if (g_.format == "csv") {
      if (!csv) throw ParseError("csv output is not available for this command");
      csv(os_);
    } else {
      human(os_);
    }
  }

  const Globals& g() const { return g_; }

 private:
  const Globals& g_;
  std::ostream& os_;
};

CountOptions count_opts(const Globals& g) {
  CountOptions o;
  o.branch_cap = g.branch_cap;
  return o;
}

std::string join(const std::vector<std::string>& v, const std::string& sep) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? sep : "") + v[i];
  return s;
}

json committee_json(const Profile& p, const Committee& c) {
  if (p.kind() != BallotKind::Party) return p.names_of(c);
  json seats = json::object();
  auto v = committee_to_seats(c, p.num_candidates());
  for (int i = 0; i < p.num_candidates(); ++i) seats[p.name(i)] = v[static_cast<std::size_t>(i)];
  return seats;
}

std::string committee_text(const Profile& p, const Committee& c) {
  if (p.kind() != BallotKind::Party) return "{" + join(p.names_of(c), ",") + "}";
  auto v = committee_to_seats(c, p.num_candidates());
  std::vector<std::string> parts;
  for (int i = 0; i < p.num_candidates(); ++i) parts.push_back(p.name(i) + "=" + std::to_string(v[static_cast<std::size_t>(i)]));
  return join(parts, " ");
}

json threshold_json(const Out& o, const ThresholdValue& t) {
  json j{{"value", o.rat(t.value)}, {"side", to_string(t.side)}, {"kind", to_string(t.kind)},
         {"status", to_string(t.status)}, {"lo", o.rat(t.lo)}, {"hi", o.rat(t.hi)},
         {"conjectured", t.conjectured}, {"source", t.source}};
  if (!t.note.empty()) j["note"] = t.note;
  o.add_decimal(j, "value", t.value);
  return j;
}

std::string threshold_text(const Out& o, const ThresholdValue& t) {
  std::string s = t.str();
  if (o.g().decimals >= 0 && t.exact()) s += " (" + t.value.decimal(o.g().decimals) + ")";
  return s;
}

// ---- count ---------------------------------------------------------------

struct CountArgs {
  std::string method, file;
};

void cmd_count(const CountArgs& a, Out& o) {
  const MethodId m = MethodId::parse(a.method);
  const Profile p = load_profile(a.file);
  if (p.kind() != m.ballot_kind())
    throw ParseError(m.str() + " needs " + to_string(m.ballot_kind()) + " ballots, profile has " + to_string(p.kind()));
  json doc{{"method", m.str()}, {"seats", p.seats()}};
  OutcomeSet out;
  std::vector<Rational> loads;
  if (m.kind == MethodKind::PhragmenU) {
    auto r = phragmen_unordered(p, count_opts(o.g()));
    out = r.outcomes;
    for (const auto& f : r.finals) {
      Rational mx(0);
      for (const auto& l : f.state.loads) mx = max(mx, l);
      loads.push_back(mx);
    }
  } else {
    out = count(m, p, count_opts(o.g()));
  }
  json cs = json::array();
  for (const auto& c : out.committees) cs.push_back(committee_json(p, c));
  doc["committees"] = cs;
  doc["truncated"] = out.truncated;
  if (!loads.empty()) {
    std::sort(loads.begin(), loads.end());
    loads.erase(std::unique(loads.begin(), loads.end()), loads.end());
    json lj = json::array();
    for (const auto& l : loads) lj.push_back(l.str());
    doc["final_max_loads"] = lj;
  }
  o.emit(
      doc,
      [&](std::ostream& os) {
        for (const auto& c : out.committees) os << committee_text(p, c) << "\n";
        if (out.truncated) os << "(truncated at branch cap)\n";
        for (const auto& l : loads) os << "final max load " << o.show(l) << "\n";
      },
      [&](std::ostream& os) {
        os << "outcome,elected\n";
        for (std::size_t i = 0; i < out.committees.size(); ++i)
          os << i + 1 << "," << join(p.names_of(out.committees[i]), " ") << "\n";
      });
  if (out.truncated) throw Exit{1};
}

// ---- apportion -----------------------------------------------------------

struct ApportionArgs {
  std::string method, votes, names;
  int seats = 0;
};

void cmd_apportion(const ApportionArgs& a, Out& o) {
  const MethodId m = MethodId::parse(a.method);
  if (m.kind != MethodKind::Div && m.kind != MethodKind::Quota) throw ParseError("apportion needs div:g or quota:d");
  std::vector<Rational> votes;
  std::stringstream ss(a.votes);
  for (std::string tok; std::getline(ss, tok, ',');) votes.push_back(Rational::parse(tok));
  std::vector<std::string> names;
  std::stringstream ns(a.names);
  for (std::string tok; std::getline(ns, tok, ',');) names.push_back(tok);
  if (names.empty())
    for (std::size_t i = 0; i < votes.size(); ++i) names.push_back("P" + std::to_string(i + 1));
  if (names.size() != votes.size()) throw ParseError("--names and --votes differ in length");
  auto r = m.kind == MethodKind::Div ? divisor_apportion(m.param, votes, a.seats, o.g().branch_cap)
                                     : quota_apportion(m.param, votes, a.seats, o.g().branch_cap);
  json vs = json::array();
  for (const auto& v : r.vectors) {
    json row = json::object();
    for (std::size_t i = 0; i < v.size(); ++i) row[names[i]] = v[i];
    vs.push_back(row);
  }
  json doc{{"method", m.str()}, {"seats", a.seats}, {"apportionments", vs}, {"truncated", r.truncated}};
  o.emit(
      doc,
      [&](std::ostream& os) {
        for (const auto& v : r.vectors) {
          std::vector<std::string> parts;
          for (std::size_t i = 0; i < v.size(); ++i) parts.push_back(names[i] + "=" + std::to_string(v[i]));
          os << join(parts, " ") << "\n";
        }
      },
      [&](std::ostream& os) {
        os << join(names, ",") << "\n";
        for (const auto& v : r.vectors) {
          std::vector<std::string> parts;
          for (int x : v) parts.push_back(std::to_string(x));
          os << join(parts, ",") << "\n";
        }
      });
  if (r.truncated) throw Exit{1};
}

// ---- check ---------------------------------------------------------------

struct CheckArgs {
  std::string method, scenario, file, target;
  int ell = 1;
};

void cmd_check(const CheckArgs& a, Out& o) {
  const MethodId m = MethodId::parse(a.method);
  const ScenarioId s = parse_scenario(a.scenario);
  Profile p = load_profile(a.file);
  std::optional<Committee> target;
  if (!a.target.empty()) {
    std::vector<std::string> names;
    std::stringstream ss(a.target);
    for (std::string tok; std::getline(ss, tok, ',');) names.push_back(tok);
    target = p.committee_of(names);
  }
  ScenarioInstance inst = make_instance(std::move(p), s, a.ell, target);
  const Profile& prof = inst.profile;
  json doc{{"method", m.str()}, {"scenario", to_string(s)}, {"ell", a.ell}};
  if (!is_instance(inst)) {
    doc["instance"] = false;
    o.emit(doc, [](std::ostream& os) { os << "not an instance of the scenario\n"; });
    throw Exit{2};
  }
  const OutcomeSet out = count(m, prof, count_opts(o.g()));
  std::vector<Committee> bad;
  for (const auto& c : out.committees)
    if (!is_good(inst, c)) bad.push_back(c);
  const bool possible = is_bad_outcome_possible(inst, out);
  json bj = json::array();
  for (const auto& c : bad) bj.push_back(committee_json(prof, c));
  doc["instance"] = true;
  doc["fraction"] = o.rat(w_fraction(inst));
  o.add_decimal(doc, "fraction", w_fraction(inst));
  doc["target"] = committee_json(prof, inst.target);
  doc["bad_possible"] = possible;
  doc["bad_committees"] = bj;
  o.emit(doc, [&](std::ostream& os) {
    os << "W fraction " << o.show(w_fraction(inst)) << "\n";
    os << (possible ? "bad outcome possible" : "every outcome is good") << "\n";
    for (const auto& c : bad) os << "  bad: " << committee_text(prof, c) << "\n";
  });
  if (possible) throw Exit{1};
}

// ---- threshold -----------------------------------------------------------

struct ThresholdArgs {
  std::string method, scenario;
  int ell = 1, seats = 1;
  bool hat = false, json_flag = false;
};

void cmd_threshold(const ThresholdArgs& a, Out& o) {
  const MethodId m = MethodId::parse(a.method);
  const ScenarioId s = parse_scenario(a.scenario);
  ThresholdValue t;
  if (a.hat) {
    if (s != ScenarioId::Tactic) throw ParseError("--hat applies to the tactic scenario");
    t = threshold_hat(m, a.ell, a.seats);
  } else {
    t = threshold(m, s, a.ell, a.seats);
  }
  json doc{{"method", m.str()}, {"scenario", to_string(s)}, {"ell", a.ell}, {"seats", a.seats}};
  doc.update(threshold_json(o, t));
  o.emit(doc, [&](std::ostream& os) {
    os << (t.kind == ValueKind::PiHat ? "pi_hat " : "pi ") << threshold_text(o, t);
    if (!t.exact() && t.status != Status::Interval) os << "  in [" << t.lo << "," << t.hi << "]";
    if (!t.note.empty()) os << "  (" << t.note << ")";
    os << "\n";
  });
}

// ---- table ---------------------------------------------------------------

void sequences_table(Out& o, int nmax) {
  json rows = json::array();
  for (int n = 1; n <= nmax; ++n)
    rows.push_back({{"n", n}, {"a", o.rat(seq_a(n))}, {"b", o.rat(seq_b(n))}, {"c", seq_c(n)}});
  json doc{{"table", "sequences"}, {"rows", rows}};
  o.emit(
      doc,
      [&](std::ostream& os) {
        os << "n\ta_n\tb_n\tc_n\n";
        for (int n = 1; n <= nmax; ++n)
          os << n << "\t" << o.show(seq_a(n)) << "\t" << o.show(seq_b(n)) << "\t" << seq_c(n) << "\n";
      },
      [&](std::ostream& os) {
        os << "n,a,b,c\n";
        for (int n = 1; n <= nmax; ++n) os << n << "," << seq_a(n) << "," << seq_b(n) << "," << seq_c(n) << "\n";
      });
}

void cmd_table(const std::string& name, int smax, Out& o) {
  if (name == "sequences") {
    sequences_table(o, smax > 0 ? smax : 6);
    return;
  }
  const int top = smax > 0 ? smax : 5;
  auto rows = threshold_table(name, top);
  json jr = json::array();
  for (const auto& row : rows) {
    json r = json::array();
    for (const auto& t : row) r.push_back(t.exact() ? json(t.value.str()) : json(t.str()));
    jr.push_back(r);
  }
  json doc{{"table", name}, {"rows", jr}};
  o.emit(
      doc,
      [&](std::ostream& os) {
        os << "S\\l";
        for (int l = 1; l <= top; ++l) os << "\t" << l;
        os << "\n";
        for (std::size_t s = 0; s < rows.size(); ++s) {
          os << s + 1;
          for (const auto& t : rows[s]) os << "\t" << threshold_text(o, t);
          os << "\n";
        }
      },
      [&](std::ostream& os) {
        os << "S,ell,value\n";
        for (std::size_t s = 0; s < rows.size(); ++s)
          for (std::size_t l = 0; l < rows[s].size(); ++l) os << s + 1 << "," << l + 1 << "," << rows[s][l].str() << "\n";
      });
}

// ---- seq -----------------------------------------------------------------

void cmd_seq(const std::string& which, int n, Out& o) {
  if (n < 1) throw DomainError("n must be positive");
  Rational v;
  std::string label = which;
  if (which == "a") v = seq_a(n);
  else if (which == "b") v = seq_b(n);
  else if (which == "c") v = Rational(seq_c(n));
  else if (which.rfind("alpha", 0) == 0) {
    std::string rest = which.substr(5);
    if (!rest.empty() && rest[0] != ':') throw ParseError("expected alpha[:scheme]");
    WeightScheme w = WeightScheme::parse(rest.empty() ? "" : rest.substr(1));
    if (o.g().dump_lp) {
      o.emit(json{{"lp", build_alpha_lp(n, w).dump()}}, [&](std::ostream& os) { os << build_alpha_lp(n, w).dump(); });
      return;
    }
    v = alpha(n, w);
    label = "alpha:" + w.key();
  } else {
    throw ParseError("unknown sequence '" + which + "'");
  }
  json doc{{"which", label}, {"n", n}, {"value", o.rat(v)}};
  o.add_decimal(doc, "value", v);
  o.emit(
      doc, [&](std::ostream& os) { os << o.show(v) << "\n"; },
      [&](std::ostream& os) { os << "which,n,value\n" << label << "," << n << "," << v << "\n"; });
}

// ---- witness -------------------------------------------------------------

struct WitnessArgs {
  std::string token, method, scenario, epsilon = "1/100";
  int ell = 1, seats = 1;
  bool list = false;
};

void cmd_witness(const WitnessArgs& a, Out& o) {
  if (a.list || a.token.empty()) {
    json cat = json::array();
    for (const auto& e : witness_catalog()) cat.push_back({{"token", e.token}, {"summary", e.summary}});
    o.emit(json{{"catalog", cat}}, [&](std::ostream& os) {
      for (const auto& e : witness_catalog()) os << e.token << "\t" << e.summary << "\n";
    });
    return;
  }
  if (a.method.empty() || a.scenario.empty()) throw ParseError("witness needs --method and --scenario");
  const MethodId m = MethodId::parse(a.method);
  const ScenarioId s = parse_scenario(a.scenario);
  Witness w = construct_witness(a.token, m, s, a.ell, a.seats, Rational::parse(a.epsilon));
  const bool ok = m.has_engine() && verify_witness(w, m, count_opts(o.g()));
  json doc{{"theorem", a.token}, {"method", m.str()}, {"scenario", to_string(s)}, {"ell", a.ell},
           {"seats", a.seats}, {"fraction", o.rat(w.claimed_fraction)}, {"verified", ok},
           {"profile", format_profile(w.instance.profile)}};
  o.add_decimal(doc, "fraction", w.claimed_fraction);
  o.emit(doc, [&](std::ostream& os) {
    os << "fraction " << o.show(w.claimed_fraction) << "\n" << format_profile(w.instance.profile);
    os << (ok ? "verified: bad outcome reachable\n" : "NOT verified\n");
  });
  if (!ok) throw Exit{1};
}

// ---- search --------------------------------------------------------------

struct SearchArgs {
  std::string method, scenario;
  int ell = 1, seats = 1;
  SearchSpec spec;
};

void cmd_search(SearchArgs a, Out& o) {
  const MethodId m = MethodId::parse(a.method);
  const ScenarioId s = parse_scenario(a.scenario);
  a.spec.branch_cap = o.g().branch_cap;
  auto r = search_lower_bound(m, s, a.ell, a.seats, a.spec);
  json doc{{"method", m.str()}, {"scenario", to_string(s)}, {"ell", a.ell}, {"seats", a.seats},
           {"evaluated", r.evaluated}, {"indeterminate", r.indeterminate}, {"budget_exhausted", r.budget_exhausted}};
  doc["best"] = r.best ? json(r.best->str()) : json(nullptr);
  if (r.best) o.add_decimal(doc, "best", *r.best);
  if (r.witness) doc["witness"] = format_profile(r.witness->instance.profile);
  o.emit(doc, [&](std::ostream& os) {
    if (r.best) os << "best bad fraction " << o.show(*r.best) << "\n" << format_profile(r.witness->instance.profile);
    else os << "no bad outcome in the grid\n";
    os << r.evaluated << " profiles evaluated";
    if (r.budget_exhausted) os << " (budget exhausted, partial result)";
    os << "\n";
  });
}

// ---- audit ---------------------------------------------------------------

void cmd_audit(int smax, bool search, Out& o) {
  auto rep = audit_table(default_scope(), smax, search);
  json vs = json::array();
  for (const auto& v : rep.violations) vs.push_back({{"family", v.family}, {"method", v.method}, {"detail", v.detail}});
  json doc{{"smax", smax}, {"checks", rep.checks}, {"searches", rep.searches}, {"violations", vs}};
  o.emit(doc, [&](std::ostream& os) {
    os << rep.checks << " checks, " << rep.searches << " searches, " << rep.violations.size() << " violations\n";
    for (const auto& v : rep.violations) os << "  " << v.family << " " << v.method << " " << v.detail << "\n";
  });
  if (!rep.ok()) throw Exit{1};
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Proportionality thresholds for multi-winner election methods"};
  app.require_subcommand(1);
  Globals g;
  app.add_option("--format", g.format, "Output format")->check(CLI::IsMember({"human", "json", "csv"}));
  app.add_option("--branch-cap", g.branch_cap, "Maximum tied branches per count")->check(CLI::PositiveNumber);
  app.add_option("--decimals", g.decimals, "Also print decimal approximations")->check(CLI::Range(0, 60));
  app.add_flag("--dump-lp", g.dump_lp, "Print the alpha LP instead of solving it");

  CountArgs ca;
  auto* c_count = app.add_subcommand("count", "Run a counting method on a profile file");
  c_count->add_option("--method", ca.method)->required();
  c_count->add_option("file", ca.file)->required();

  ApportionArgs aa;
  auto* c_app = app.add_subcommand("apportion", "Apportion seats from party vote totals");
  c_app->add_option("--method", aa.method)->required();
  c_app->add_option("--seats", aa.seats)->required()->check(CLI::PositiveNumber);
  c_app->add_option("--votes", aa.votes, "Comma-separated rationals")->required();
  c_app->add_option("--names", aa.names, "Comma-separated party names");

  CheckArgs ka;
  auto* c_check = app.add_subcommand("check", "Is a bad outcome possible for W (the !W groups)?");
  c_check->add_option("--method", ka.method)->required();
  c_check->add_option("--scenario", ka.scenario)->required();
  c_check->add_option("--ell", ka.ell)->required();
  c_check->add_option("--target", ka.target, "Comma-separated candidate set A");
  c_check->add_option("file", ka.file)->required();

  ThresholdArgs ta;
  auto* c_thr = app.add_subcommand("threshold", "Threshold value for a method and scenario");
  c_thr->add_option("--method", ta.method)->required();
  c_thr->add_option("--scenario", ta.scenario)->required();
  c_thr->add_option("--ell", ta.ell)->required();
  c_thr->add_option("--seats", ta.seats)->required();
  c_thr->add_flag("--hat", ta.hat, "Large-electorate tactic value");
  c_thr->add_flag("--json", ta.json_flag, "Same as --format json");

  std::string table_name;
  int table_max = 0;
  auto* c_table = app.add_subcommand("table", "Regenerate a threshold or sequence grid");
  c_table->add_option("name", table_name)->required()->check(CLI::IsMember(table_names()));
  c_table->add_option("--max", table_max, "Largest S (or n for sequences)");

  std::string which;
  int seq_n = 1;
  auto* c_seq = app.add_subcommand("seq", "Sequence value");
  c_seq->add_option("--which", which, "a | b | c | alpha[:scheme]")->required();
  c_seq->add_option("--n", seq_n)->required();

  WitnessArgs wa;
  auto* c_wit = app.add_subcommand("witness", "Construct and verify a catalog witness");
  c_wit->add_option("--theorem", wa.token, "Catalog token");
  c_wit->add_option("--method", wa.method);
  c_wit->add_option("--scenario", wa.scenario);
  c_wit->add_option("--ell", wa.ell);
  c_wit->add_option("--seats", wa.seats);
  c_wit->add_option("--epsilon", wa.epsilon);
  c_wit->add_flag("--list", wa.list, "List catalog tokens");

  SearchArgs sa;
  auto* c_search = app.add_subcommand("search", "Bounded search for bad instances");
  c_search->add_option("--method", sa.method)->required();
  c_search->add_option("--scenario", sa.scenario)->required();
  c_search->add_option("--ell", sa.ell)->required();
  c_search->add_option("--seats", sa.seats)->required();
  c_search->add_option("--grid", sa.spec.weight_grid, "Max integer weight (tactic: total votes)");
  c_search->add_option("--candidates", sa.spec.max_candidates);
  c_search->add_option("--groups", sa.spec.max_ballot_groups);
  c_search->add_option("--length", sa.spec.max_ballot_length);
  c_search->add_option("--budget", sa.spec.budget);

  int audit_max = 5;
  bool audit_search = false;
  auto* c_audit = app.add_subcommand("audit", "Check the inequality families over the corpus");
  c_audit->add_option("--smax", audit_max);
  c_audit->add_flag("--search", audit_search, "Also compare small entries with bounded search");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? 0 : 2;
  }
  if (ta.json_flag) g.format = "json";
  Out o(g, out);
  try {
    if (c_count->parsed()) cmd_count(ca, o);
    else if (c_app->parsed()) cmd_apportion(aa, o);
    else if (c_check->parsed()) cmd_check(ka, o);
    else if (c_thr->parsed()) cmd_threshold(ta, o);
    else if (c_table->parsed()) cmd_table(table_name, table_max, o);
    else if (c_seq->parsed()) cmd_seq(which, seq_n, o);
    else if (c_wit->parsed()) cmd_witness(wa, o);
    else if (c_search->parsed()) cmd_search(sa, o);
    else if (c_audit->parsed()) cmd_audit(audit_max, audit_search, o);
  } catch (const Exit& e) {
    return e.code;
  } catch (const IndeterminateError& e) {
    err << "indeterminate: " << e.what() << "\n";
    return 1;
  } catch (const BudgetError& e) {
    err << "budget: " << e.what() << "\n";
    return 1;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}

}  // namespace pthresh
