#ifndef QOSC_COMMANDS_HPP
#define QOSC_COMMANDS_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace qosc {

enum ExitCode : int {
    kExitOk = 0,
    kExitInvalidInput = 1,
    kExitNoRepresentation = 2,
};

/// Runs the command-line front end on argv-style arguments (without the
/// program name). Reports go to `out` (or --out FILE), diagnostics to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace qosc

#endif // QOSC_COMMANDS_HPP
