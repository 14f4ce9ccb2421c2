#pragma once

/**
 * @file cli.hpp
 * @brief Command-line front end.
 *
 * Exit codes: 0 on success (connections and planarity failures are results),
 * 1 on domain errors raised by the library, 2 on usage errors.
 */

#include <ostream>
#include <string>
#include <vector>

namespace iet::cli {

/// args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace iet::cli
