#pragma once

#include <iosfwd>

namespace pcaf {

// Runs the command-line tool on the given streams and returns the process
// exit code: 0 on success, 1 for a negative answer under --strict-exit,
// 2 for input or resource errors.
int run_cli(int argc, const char* const* argv, std::istream& in, std::ostream& out,
            std::ostream& err);

}  // namespace pcaf
