#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace tiling {

// Runs the command-line surface. Exit codes: 0 success, 1 validation
// problems found, 2 usage or parse errors. Artifacts go to --out or `out`;
// diagnostics go to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace tiling
