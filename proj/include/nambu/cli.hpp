#ifndef NAMBU_CLI_HPP
#define NAMBU_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace nambu {

// Batch front door. Parses one subcommand invocation, dispatches, and
// prints a deterministic JSON report to `out`.
// Exit codes: 0 success, 2 hypothesis violation, 3 parse error,
// 4 unstabilized result under --strict.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace nambu

#endif
