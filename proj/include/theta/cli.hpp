#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace theta {

// Runs one CLI invocation (argv without the program name).  Writes JSON
// lines (or TSV) to out and diagnostics to err.  Exit codes: 0 ok,
// 1 domain error, 2 usage or parse error.
int cli_run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace theta
