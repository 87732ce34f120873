#include "pthresh/profile_io.hpp"

#include <fstream>
#include <optional>
#include <sstream>

#include "pthresh/errors.hpp"

namespace pthresh {

namespace {

std::string trim(const std::string& s) {
  auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::vector<std::string> split_names(const std::string& s) {
  std::vector<std::string> out;
  std::string cur;
  for (char ch : s) {
    if (ch == ' ' || ch == '\t' || ch == ',') {
      if (!cur.empty()) out.push_back(cur);
      cur.clear();
    } else {
      cur += ch;
    }
  }
  if (!cur.empty()) out.push_back(cur);
  return out;
}

}  // namespace

Profile parse_profile(const std::string& text) {
  std::istringstream in(text);
  std::string raw;
  int line_no = 0;
  std::optional<int> seats;
  std::optional<BallotKind> kind;
  std::vector<std::string> extra;
  std::vector<NamedGroup> groups;

  while (std::getline(in, raw)) {
    ++line_no;
    std::string line = trim(raw.substr(0, raw.find('#')));
    if (line.empty()) continue;

    bool in_w = false;
    if (line.rfind("!seats", 0) == 0) {
      std::string arg = trim(line.substr(6));
      try {
        std::size_t used = 0;
        int s = std::stoi(arg, &used);
        if (used != arg.size() || s < 1) throw std::invalid_argument("seats");
        seats = s;
      } catch (const std::exception&) {
        throw ParseError("bad seat count '" + arg + "'", line_no);
      }
      continue;
    }
    if (line.rfind("!candidates", 0) == 0) {
      for (auto& n : split_names(line.substr(11))) {
        if (!valid_candidate_id(n)) throw ParseError("invalid candidate id '" + n + "'", line_no);
        extra.push_back(n);
      }
      continue;
    }
    if (line.rfind("!W", 0) == 0) {
      in_w = true;
      line = trim(line.substr(2));
    } else if (line[0] == '!') {
      throw ParseError("unknown directive '" + line + "'", line_no);
    }

    auto colon = line.find(':');
    if (colon == std::string::npos) throw ParseError("expected '<weight> : <ballot>'", line_no);
    NamedGroup g;
    g.in_w = in_w;
    try {
      g.weight = Rational::parse(trim(line.substr(0, colon)));
    } catch (const ParseError& e) {
      throw ParseError(e.what(), line_no);
    }
    if (g.weight.sign() < 0) throw ParseError("negative weight", line_no);

    std::string body = trim(line.substr(colon + 1));
    BallotKind k;
    if (body.rfind("party", 0) == 0 && body.size() > 5 && (body[5] == ' ' || body[5] == '\t')) {
      k = BallotKind::Party;
      g.names = split_names(body.substr(5));
      if (g.names.size() != 1) throw ParseError("party ballot needs exactly one name", line_no);
    } else if (!body.empty() && (body.front() == '{' || body.front() == '[')) {
      char close = body.front() == '{' ? '}' : ']';
      if (body.back() != close) throw ParseError(std::string("missing '") + close + "'", line_no);
      k = body.front() == '{' ? BallotKind::Unordered : BallotKind::Ordered;
      g.names = split_names(body.substr(1, body.size() - 2));
      if (g.names.empty()) throw ParseError("empty ballot", line_no);
    } else {
      throw ParseError("unrecognized ballot '" + body + "'", line_no);
    }
    for (const auto& n : g.names)
      if (!valid_candidate_id(n)) throw ParseError("invalid candidate id '" + n + "'", line_no);
    for (std::size_t i = 0; i < g.names.size(); ++i)
      for (std::size_t j = i + 1; j < g.names.size(); ++j)
        if (g.names[i] == g.names[j]) throw ParseError("candidate '" + g.names[i] + "' repeated", line_no);
    if (kind && *kind != k) throw ParseError("mixed ballot kinds in one profile", line_no);
    kind = k;
    groups.push_back(std::move(g));
  }

  if (!seats) throw ParseError("missing '!seats' directive");
  if (groups.empty()) throw ParseError("profile has no ballots");
  try {
    return Profile::from_named(*kind, *seats, groups, extra);
  } catch (const ValidationError& e) {
    throw ParseError(e.what());
  }
}

Profile load_profile(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw ParseError("cannot open '" + path + "'");
  std::stringstream ss;
  ss << f.rdbuf();
  return parse_profile(ss.str());
}

std::string format_profile(const Profile& p) {
  std::ostringstream out;
  out << "!seats " << p.seats() << "\n";
  std::vector<bool> used(static_cast<std::size_t>(p.num_candidates()), false);
  for (const auto& g : p.groups())
    for (int n : g.names) used[static_cast<std::size_t>(n)] = true;
  std::string unused;
  for (int i = 0; i < p.num_candidates(); ++i)
    if (!used[static_cast<std::size_t>(i)]) unused += " " + p.name(i);
  if (!unused.empty()) out << "!candidates" << unused << "\n";
  for (const auto& g : p.groups()) {
    if (g.in_w) out << "!W ";
    out << g.weight.str() << " : ";
    if (p.kind() == BallotKind::Party) {
      out << "party " << p.name(g.names[0]);
    } else {
      out << (p.kind() == BallotKind::Unordered ? '{' : '[');
      for (std::size_t i = 0; i < g.names.size(); ++i) out << (i ? " " : "") << p.name(g.names[i]);
      out << (p.kind() == BallotKind::Unordered ? '}' : ']');
    }
    out << "\n";
  }
  return out.str();
}

}  // namespace pthresh
