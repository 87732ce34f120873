#pragma once

#include <string>

#include "pthresh/profile.hpp"

namespace pthresh {

// Text format, one ballot group per line:
//   <weight> : party NAME | {A B C} | [A B C]
// Directives: `!seats S`, `!candidates A B ...`, and a `!W` line prefix that
// marks the group as part of the designated voter set. `#` starts a comment.
Profile parse_profile(const std::string& text);
Profile load_profile(const std::string& path);
std::string format_profile(const Profile& p);

}  // namespace pthresh
