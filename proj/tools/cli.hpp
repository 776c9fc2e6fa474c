#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace fll::cli {

// Runs one CLI invocation and returns the process exit code: 0 on success,
// 1 when a verification cross-check fails, 2 on usage errors. The vector
// overload takes the arguments without the program name and writes to the
// given streams, which is the entry point the tests drive.
int run(int argc, const char* const* argv);
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace fll::cli
