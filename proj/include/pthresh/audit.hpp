#pragma once

#include <string>
#include <vector>

#include "pthresh/method.hpp"
#include "pthresh/search.hpp"

namespace pthresh {

struct AuditViolation {
  std::string family;
  std::string method;
  std::string detail;
};

struct AuditReport {
  long checks = 0;
  long searches = 0;
  std::vector<AuditViolation> violations;
  bool ok() const { return violations.empty(); }
};

// A representative method of every kind the threshold corpus covers.
std::vector<MethodId> default_scope();

// Checks the inequality families on every (ell, S), S <= smax. With
// `search`, Exact entries with S <= 3 are also compared against a coarse
// bounded search.
AuditReport audit_table(const std::vector<MethodId>& scope, int smax, bool search = false,
                        const SearchSpec& coarse = {3, 2, 2, 2, 2000, 20000});

}  // namespace pthresh
