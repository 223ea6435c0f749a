#ifndef SEPSTAT_TOOLS_COMMANDS_HPP
#define SEPSTAT_TOOLS_COMMANDS_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace sepstat::cli {

enum ExitCode : int {
  kSuccess = 0,
  kVerificationFailure = 1,
  kUsageError = 2,
};

// Runs the command line `args` (args[0] is the program name). Results go to
// `out`, diagnostics and warnings to `err`. Returns the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

// RFC 4180 field quoting: fields containing a comma, quote, CR or LF are
// wrapped in double quotes with embedded quotes doubled.
std::string csv_field(const std::string& value);

}  // namespace sepstat::cli

#endif  // SEPSTAT_TOOLS_COMMANDS_HPP
