#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace naxes {

// Runs the command-line tool on the given arguments (without the program
// name), writing reports to out and diagnostics to err. Returns the
// process exit code: 0 success, 1 a checked statement failed (or its
// hypothesis did not hold), 2 bad input or configuration, 3 the sampler
// ran out of retries.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace naxes
