#pragma once

/**
 * @file cli.hpp
 * @brief Command-line front end: check, derive, build and residual.
 *
 * Exit codes: 0 pass, 1 law violation or failed stage, 2 usage, parse or
 * shape error.
 */

#include <iosfwd>
#include <string>
#include <vector>

namespace forge {

/// Runs one command; `args` excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace forge
