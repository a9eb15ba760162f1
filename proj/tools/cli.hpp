#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace autxy {

// Runs one command (argv without the program name) and writes the result to
// out, diagnostics to err.  Returns the process exit code: 0 on success,
// 1 on domain errors or failed criteria, 2 on parse errors.
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace autxy
