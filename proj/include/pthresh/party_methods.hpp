#pragma once

#include <cstddef>
#include <vector>

#include "pthresh/rational.hpp"

namespace pthresh {

using SeatVector = std::vector<int>;

struct Apportionment {
  std::vector<SeatVector> vectors;  // sorted, unique
  bool truncated = false;
};

// Sequential highest-quotient allocation with divisors d(n) = n - 1 + gamma.
// gamma = 1 is D'Hondt, 1/2 Sainte-Lague, 0 Adams. Ties branch.
Apportionment divisor_apportion(const Rational& gamma, const std::vector<Rational>& votes, int seats,
                                std::size_t branch_cap = 10000);

// All seat vectors with sum S such that for some t in [0,1] every party has
// s_i - 1 + t <= v_i / Q <= s_i + t, where Q = V / (S + delta).
Apportionment quota_apportion(const Rational& delta, const std::vector<Rational>& votes, int seats,
                              std::size_t branch_cap = 10000);

}  // namespace pthresh
