#ifndef QMASON_CLI_HPP
#define QMASON_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace qmason {

// Runs one CLI invocation (argv without the program name). Writes the report
// to out and diagnostics to err. Exit status: 0 the verdict holds or the
// computation succeeded, 1 a verified counterexample or an inapplicable
// premise, 2 usage, parse, or inadmissible-q errors.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace qmason

#endif  // QMASON_CLI_HPP
