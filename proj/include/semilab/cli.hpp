#ifndef SEMILAB_CLI_HPP_
#define SEMILAB_CLI_HPP_

#include <iosfwd>
#include <string>
#include <vector>

namespace semilab::cli {

// Run a semilab command line (without the program name).  Returns the exit
// code: 0 success, 1 usage error, 2 input-data error, 3 violated internal
// invariant.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace semilab::cli

#endif  // SEMILAB_CLI_HPP_
