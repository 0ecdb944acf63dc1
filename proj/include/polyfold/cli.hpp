// Command-line frontend: fold, netgen and verify subcommands.
#pragma once

#include <iostream>
#include <string>
#include <vector>

namespace polyfold {

enum ExitCode { kExitYes = 0, kExitNo = 1, kExitInputError = 2 };

/// Runs one command line (without the program name) and returns its exit code.
int run(const std::vector<std::string>& args, std::ostream& out = std::cout, std::ostream& err = std::cerr);

}  // namespace polyfold
