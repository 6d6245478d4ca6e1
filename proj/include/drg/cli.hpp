#pragma once

// Command-line front end. run_cli is the whole program minus process glue,
// taking argv (without the program name) and the two output streams, so tests
// can drive every verb in-process and assert on bytes and exit codes.

#include <iosfwd>
#include <string>
#include <vector>

namespace drg {

// Exit codes: 0 success, 1 usage or flag errors, 2 validation/infeasibility,
// 3 numerical failure, 4 verify-check failure.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace drg
