#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace superindex {

// Runs one CLI invocation.  Exit codes: 0 success, 1 usage/parse errors,
// 2 domain errors (one JSON diagnostic object on err).
int cli_run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace superindex
