#include "pthresh/party_methods.hpp"

#include <algorithm>
#include <optional>
#include <set>

#include "pthresh/errors.hpp"

namespace pthresh {

namespace {

void check_votes(const std::vector<Rational>& votes, int seats) {
  if (seats < 1) throw DomainError("seats must be positive");
  if (votes.empty()) throw DomainError("no parties");
  Rational total;
  for (const auto& v : votes) {
    if (v.sign() < 0) throw DomainError("negative vote count");
    total += v;
  }
  if (total.is_zero()) throw DomainError("no party has votes");
}

}  // namespace

Apportionment divisor_apportion(const Rational& gamma, const std::vector<Rational>& votes, int seats,
                                std::size_t branch_cap) {
  check_votes(votes, seats);
  if (gamma.sign() < 0 || gamma > Rational(1)) throw DomainError("gamma must lie in [0,1]");
  if (gamma.is_zero()) {
    auto positive = std::count_if(votes.begin(), votes.end(), [](const Rational& v) { return v.sign() > 0; });
    if (positive > seats) throw AdamsIllDefined("Adams' method is ill-defined with more parties than seats");
  }

  Apportionment out;
  std::set<SeatVector> frontier{SeatVector(votes.size(), 0)};
  for (int round = 0; round < seats; ++round) {
    std::set<SeatVector> next;
    for (const auto& s : frontier) {
      // nullopt stands for an infinite quotient (zero divisor, positive votes).
      std::vector<std::optional<Rational>> q(votes.size());
      for (std::size_t i = 0; i < votes.size(); ++i) {
        Rational d = Rational(s[i]) + gamma;
        if (d.is_zero())
          q[i] = votes[i].sign() > 0 ? std::nullopt : std::optional<Rational>(Rational(0));
        else
          q[i] = votes[i] / d;
      }
      auto beats = [](const std::optional<Rational>& a, const std::optional<Rational>& b) {
        if (!a) return b.has_value();
        return b && *a > *b;
      };
      std::optional<Rational> best = Rational(-1);
      for (const auto& x : q)
        if (beats(x, best)) best = x;
      for (std::size_t i = 0; i < votes.size(); ++i) {
        if (beats(best, q[i])) continue;
        SeatVector t = s;
        ++t[i];
        next.insert(std::move(t));
        if (next.size() >= branch_cap) break;
      }
      if (next.size() >= branch_cap) {
        out.truncated = true;
        break;
      }
    }
    frontier = std::move(next);
  }
  out.vectors.assign(frontier.begin(), frontier.end());
  return out;
}

Apportionment quota_apportion(const Rational& delta, const std::vector<Rational>& votes, int seats,
                              std::size_t branch_cap) {
  check_votes(votes, seats);
  if (delta.sign() < 0 || delta > Rational(1)) throw DomainError("delta must lie in [0,1]");
  Rational total;
  for (const auto& v : votes) total += v;
  std::vector<Rational> x;
  for (const auto& v : votes) x.push_back(v * (Rational(seats) + delta) / total);

  const std::size_t n = votes.size();
  Apportionment out;
  SeatVector s(n, 0);
  // Depth-first over s_i in [x_i - 1, x_i + 1], keeping the t-interval non-empty.
  auto rec = [&](auto&& self, std::size_t i, int used, Rational lo, Rational hi) -> void {
    if (out.truncated) return;
    if (i == n) {
      if (used == seats) {
        out.vectors.push_back(s);
        if (out.vectors.size() >= branch_cap) out.truncated = true;
      }
      return;
    }
    long from = std::max(0L, (x[i] - Rational(1)).ceil().to_long());
    long to = (x[i] + Rational(1)).floor().to_long();
    for (long si = from; si <= to && used + si <= seats; ++si) {
      Rational d = x[i] - Rational(si);
      Rational nlo = max(lo, d);
      Rational nhi = min(hi, d + Rational(1));
      if (nlo > nhi) continue;
      s[i] = static_cast<int>(si);
      self(self, i + 1, used + static_cast<int>(si), nlo, nhi);
    }
  };
  rec(rec, 0, 0, Rational(0), Rational(1));
  std::sort(out.vectors.begin(), out.vectors.end());
  return out;
}

}  // namespace pthresh
