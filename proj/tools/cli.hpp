#ifndef TAG5_CLI_HPP
#define TAG5_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace tag5 {

/// Runs the command line tool on args (without the program name).
/// Returns 0 for accept/valid, 1 for reject/invalid, 2 for usage or input
/// errors.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace tag5

#endif  // TAG5_CLI_HPP
