#ifndef LOOPCHAIN_CLI_H_
#define LOOPCHAIN_CLI_H_

#include <ostream>
#include <string>
#include <vector>

namespace loopchain {

// Runs the command line `args` (program name excluded). Results go to `out`,
// diagnostics to `err`. Returns 0 on success, 1 when a verification or
// divisorial report fails, 2 on input errors.
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace loopchain

#endif  // LOOPCHAIN_CLI_H_
