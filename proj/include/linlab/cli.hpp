#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace linlab {

// Exit codes: 0 success / all checks pass, 1 a verifier or search found a
// violation, 2 usage or input error.
int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace linlab
