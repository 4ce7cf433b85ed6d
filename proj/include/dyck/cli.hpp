#pragma once

#include <iosfwd>

namespace dyck {

// Exit codes: 0 success, 1 verification failure, 2 usage error.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err, std::istream& in);

}  // namespace dyck
