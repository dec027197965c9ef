#ifndef RENORM_CLI_DISPATCH_HPP
#define RENORM_CLI_DISPATCH_HPP

#include <string>
#include <vector>

namespace renorm::cli {

// Runs one CLI invocation (args without the program name).  Output files are
// written atomically (temp file + rename).  Exit codes: 0 success, 1 invalid
// configuration or usage, 2 topology incompatibility, 3 solver
// non-convergence.
int dispatch(const std::vector<std::string>& args);

} // namespace renorm::cli

#endif
