#include "pthresh/method.hpp"

#include "pthresh/errors.hpp"
#include "pthresh/ordered_methods.hpp"
#include "pthresh/party_methods.hpp"
#include "pthresh/unordered_methods.hpp"

namespace pthresh {

namespace {

std::pair<std::string, std::string> split_colon(const std::string& s) {
  auto c = s.find(':');
  if (c == std::string::npos) return {s, ""};
  return {s.substr(0, c), s.substr(c + 1)};
}

}  // namespace

MethodId MethodId::parse(const std::string& text) {
  auto [head, arg] = split_colon(text);
  auto no_arg = [&, h = head, a = arg](MethodId m) {
    if (!a.empty()) throw ParseError("method '" + h + "' takes no parameter");
    return m;
  };
  if (head == "div") {
    if (arg.empty()) throw ParseError("div needs a parameter, e.g. div:1/2");
    return div(Rational::parse(arg));
  }
  if (head == "dhondt") return no_arg(div(Rational(1)));
  if (head == "stl") return no_arg(div(Rational(1, 2)));
  if (head == "adams") return no_arg(div(Rational(0)));
  if (head == "quota") {
    if (arg.empty()) throw ParseError("quota needs a parameter, e.g. quota:1");
    return quota(Rational::parse(arg));
  }
  if (head == "hare") return no_arg(quota(Rational(0)));
  if (head == "droop") return no_arg(quota(Rational(1)));
  if (head == "bv") return no_arg(plain(MethodKind::BV));
  if (head == "av") return no_arg(plain(MethodKind::AV));
  if (head == "sntv") return no_arg(plain(MethodKind::SNTV));
  if (head == "lv") {
    try {
      std::size_t used = 0;
      int l = std::stoi(arg, &used);
      if (used != arg.size() || l < 1) throw std::invalid_argument("L");
      return lv(l);
    } catch (const std::exception&) {
      throw ParseError("lv needs a positive integer, e.g. lv:2");
    }
  }
  if (head == "cv") return no_arg(plain(MethodKind::CV));
  if (head == "cvq") return no_arg(plain(MethodKind::CVq));
  if (head == "phragmen") return no_arg(plain(MethodKind::PhragmenU));
  if (head == "thiele-opt") return weighted(MethodKind::ThieleOpt, WeightScheme::parse(arg));
  if (head == "thiele-add") return weighted(MethodKind::ThieleAdd, WeightScheme::parse(arg));
  if (head == "thiele-elim") return no_arg(plain(MethodKind::ThieleElim));
  if (head == "stv") return stv(arg.empty() ? Rational(1) : Rational::parse(arg));
  if (head == "phragmen-o") return no_arg(plain(MethodKind::PhragmenO));
  if (head == "thiele-o") return no_arg(plain(MethodKind::ThieleO));
  if (head == "borda") return weighted(MethodKind::Borda, WeightScheme::parse(arg));
  throw ParseError("unknown method '" + text + "'");
}

std::string MethodId::str() const {
  switch (kind) {
    case MethodKind::Div: return "div:" + param.str();
    case MethodKind::Quota: return "quota:" + param.str();
    case MethodKind::BV: return "bv";
    case MethodKind::AV: return "av";
    case MethodKind::SNTV: return "sntv";
    case MethodKind::LV: return "lv:" + std::to_string(limit);
    case MethodKind::CV: return "cv";
    case MethodKind::CVq: return "cvq";
    case MethodKind::PhragmenU: return "phragmen";
    case MethodKind::ThieleOpt: return "thiele-opt:" + weights.key();
    case MethodKind::ThieleAdd: return "thiele-add:" + weights.key();
    case MethodKind::ThieleElim: return "thiele-elim";
    case MethodKind::STV: return "stv:" + param.str();
    case MethodKind::PhragmenO: return "phragmen-o";
    case MethodKind::ThieleO: return "thiele-o";
    case MethodKind::Borda: return "borda:" + weights.key();
  }
  return "?";
}

BallotKind MethodId::ballot_kind() const {
  switch (kind) {
    case MethodKind::Div:
    case MethodKind::Quota: return BallotKind::Party;
    case MethodKind::STV:
    case MethodKind::PhragmenO:
    case MethodKind::ThieleO:
    case MethodKind::Borda: return BallotKind::Ordered;
    default: return BallotKind::Unordered;
  }
}

bool MethodId::has_engine() const { return kind != MethodKind::CV; }

int max_ballot_size(const MethodId& m, int seats) {
  switch (m.kind) {
    case MethodKind::BV: return seats;
    case MethodKind::SNTV: return 1;
    case MethodKind::LV: return m.limit;
    case MethodKind::Div:
    case MethodKind::Quota: return 1;
    default: return kMaxCandidates;
  }
}

Committee seats_to_committee(const std::vector<int>& seats) {
  Committee c;
  for (std::size_t i = 0; i < seats.size(); ++i)
    for (int k = 0; k < seats[i]; ++k) c.push_back(static_cast<int>(i));
  return c;
}

std::vector<int> committee_to_seats(const Committee& c, int parties) {
  std::vector<int> s(static_cast<std::size_t>(parties), 0);
  for (int i : c) ++s.at(static_cast<std::size_t>(i));
  return s;
}

OutcomeSet count(const MethodId& m, const Profile& p, const CountOptions& opt) {
  if (p.kind() != m.ballot_kind())
    throw ValidationError("method " + m.str() + " needs " + to_string(m.ballot_kind()) + " ballots, profile has " +
                          to_string(p.kind()));
  switch (m.kind) {
    case MethodKind::Div:
    case MethodKind::Quota: {
      require_countable(p);
      std::vector<Rational> votes(static_cast<std::size_t>(p.num_candidates()));
      for (const auto& g : p.groups()) votes[static_cast<std::size_t>(g.names[0])] += g.weight;
      Apportionment a = m.kind == MethodKind::Div ? divisor_apportion(m.param, votes, p.seats(), opt.branch_cap)
                                                  : quota_apportion(m.param, votes, p.seats(), opt.branch_cap);
      OutcomeSet out;
      out.truncated = a.truncated;
      for (const auto& s : a.vectors) out.committees.push_back(seats_to_committee(s));
      out.canonicalize();
      return out;
    }
    case MethodKind::BV: return score_family_count(ApprovalRule::block(), p, opt);
    case MethodKind::AV: return score_family_count(ApprovalRule::approval(), p, opt);
    case MethodKind::SNTV: return score_family_count(ApprovalRule::sntv(), p, opt);
    case MethodKind::LV: return score_family_count(ApprovalRule::limited(m.limit), p, opt);
    case MethodKind::CVq: return score_family_count(ApprovalRule::cumulative(), p, opt);
    case MethodKind::CV: throw UnsupportedError("cumulative voting with free splits has no counting engine; use cvq");
    case MethodKind::PhragmenU: return phragmen_unordered(p, opt).outcomes;
    case MethodKind::ThieleOpt: return thiele_optimize(m.weights, p, opt);
    case MethodKind::ThieleAdd: return thiele_addition(m.weights, p, opt);
    case MethodKind::ThieleElim: return thiele_elimination(p, opt);
    case MethodKind::STV: return stv_count(m.param, p, opt);
    case MethodKind::PhragmenO: return phragmen_ordered(p, opt).outcomes;
    case MethodKind::ThieleO: return thiele_ordered(p, opt);
    case MethodKind::Borda: return borda_count(m.weights, p, opt);
  }
  throw UnsupportedError("unknown method");
}

}  // namespace pthresh
