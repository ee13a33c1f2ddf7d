#ifndef BOOLNET_CLI_HPP_
#define BOOLNET_CLI_HPP_

#include <iosfwd>

namespace boolnet {

// Exit codes of the command-line tool.
enum ExitCode : int {
  kExitOk = 0,
  kExitUsage = 1,
  kExitParse = 2,       // expression or DIMACS syntax
  kExitEvaluation = 3,  // assignment misses a variable
  kExitBudget = 4,      // oracle variable cap, clause cap, node budget
  kExitIo = 5,          // unreadable files, corrupt network files
  kExitQuery = 6,       // expression not hosted by the network
};

int run_cli(int argc, const char* const* argv, std::ostream& out,
            std::ostream& err);

}  // namespace boolnet

#endif  // BOOLNET_CLI_HPP_
