// Command dispatcher behind the gradedq executable. Kept as a library entry
// point so the test suite can drive every command in-process and compare
// captured output against golden runs.

#ifndef GRADEDQ_CLI_DISPATCH_HPP
#define GRADEDQ_CLI_DISPATCH_HPP

#include <ostream>
#include <string>
#include <vector>

namespace gradedq::cli {

// Runs one command line (without the program name). Returns the process exit
// code: 0 on success, 1 on a mathematical failure (reported on err), 2 on a
// usage or parse error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace gradedq::cli

#endif
