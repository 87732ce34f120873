#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "pthresh/rational.hpp"

namespace pthresh {

enum class BallotKind { Party, Unordered, Ordered };

std::string to_string(BallotKind k);

// A ballot group: `weight` voters casting the same ballot. Names are candidate
// indices; unordered ballots keep them sorted, ordered ballots keep rank order.
struct Group {
  std::vector<int> names;
  Rational weight;
  bool in_w = false;
};

struct NamedGroup {
  Rational weight;
  std::vector<std::string> names;
  bool in_w = false;
};

// Sorted candidate indices. For party profiles a sorted multiset of party
// indices, i.e. a seat vector in another form.
using Committee = std::vector<int>;

struct OutcomeSet {
  std::vector<Committee> committees;  // sorted, unique
  bool truncated = false;

  bool contains(const Committee& c) const;
  std::size_t size() const { return committees.size(); }
  void canonicalize();
};

inline constexpr int kMaxCandidates = 64;
using Mask = std::uint64_t;

class Profile {
 public:
  Profile() = default;
  // Candidate names are sorted and group indices remapped accordingly.
  Profile(BallotKind kind, int seats, std::vector<std::string> candidates, std::vector<Group> groups);
  static Profile from_named(BallotKind kind, int seats, const std::vector<NamedGroup>& groups,
                            const std::vector<std::string>& extra_candidates = {});

  BallotKind kind() const { return kind_; }
  int seats() const { return seats_; }
  int num_candidates() const { return static_cast<int>(candidates_.size()); }
  const std::vector<std::string>& candidates() const { return candidates_; }
  const std::vector<Group>& groups() const { return groups_; }
  const std::string& name(int i) const { return candidates_.at(static_cast<std::size_t>(i)); }
  int index_of(const std::string& name) const;  // -1 when absent

  Rational total() const;
  Rational w_total() const;
  bool has_w() const;

  std::vector<std::string> names_of(const Committee& c) const;
  Committee committee_of(const std::vector<std::string>& names) const;

  Profile with_seats(int seats) const;
  Profile with_w(const std::vector<bool>& flags) const;

 private:
  BallotKind kind_ = BallotKind::Unordered;
  int seats_ = 1;
  std::vector<std::string> candidates_;
  std::vector<Group> groups_;
};

bool valid_candidate_id(const std::string& id);

// Merge identical ballots (same content and W flag), drop zero weights.
Profile normalize(const Profile& p);
Profile scale(const Profile& p, const Rational& factor);

// Throws ValidationError if V = 0 or the profile does not fit 64-bit masks.
void require_countable(const Profile& p);

Mask mask_of(const std::vector<int>& names);
Committee committee_of_mask(Mask m);
std::vector<Committee> all_subsets(const std::vector<int>& pool, int k);

}  // namespace pthresh
