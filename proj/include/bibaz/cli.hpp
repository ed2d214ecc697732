#ifndef BIBAZ_CLI_HPP
#define BIBAZ_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace bibaz {

// Exit codes shared by every subcommand.
enum ExitCode : int {
  kExitOk = 0,
  kExitInternal = 1,
  kExitValidation = 2,
  kExitDegenerate = 3,
  kExitFalsified = 4,
};

// Runs the command line `args` (args[0] is the program name). Output goes to
// `out`, diagnostics to `err`; files named by --out/--trace are written directly.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace bibaz

#endif
