#ifndef TN3_CLI_HPP
#define TN3_CLI_HPP

#include <iosfwd>

namespace tn3 {

/// Command dispatch; returns the process exit code.
/// 0 success; 1 inequivalent; 2 undecided; 64 malformed document;
/// 65 precondition/validation failure.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

} // namespace tn3

#endif
