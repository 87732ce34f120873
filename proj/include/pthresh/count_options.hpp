#pragma once

#include <cstddef>
#include <cstdint>

namespace pthresh {

struct CountOptions {
  // Maximum number of committees (or live branch states) before truncating.
  std::size_t branch_cap = 10000;
  // Maximum number of committees examined by exhaustive optimisation.
  std::uint64_t enumeration_budget = 2'000'000;
};

}  // namespace pthresh
