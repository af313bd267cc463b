#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace rattrig {

// Full command-line surface behind a testable entry point. Returns the
// process exit code: 0 success, 1 I/O, 2 usage or configuration, 3
// mathematical inconsistency, 4 no in-field solution.
int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err);

}  // namespace rattrig
