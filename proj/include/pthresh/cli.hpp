#pragma once

#include <iostream>

namespace pthresh {

// Exit codes: 0 success, 1 domain failure (bad outcome, violated inequality,
// indeterminate count), 2 usage or parse error.
int run_cli(int argc, const char* const* argv, std::ostream& out = std::cout, std::ostream& err = std::cerr);

}  // namespace pthresh
