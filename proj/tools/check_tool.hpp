#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace floppy::cli {

// The `check` front end: parses the flags, runs every input through the
// engine, prints one report per input. Exit 0 = nothing prohibited, 2 = at
// least one prohibition, 1 = usage or data error.
int run_check(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace floppy::cli
