#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace detkrs {

/// Runs the command-line front end; arguments exclude the program name.
/// Returns 0 on success, 1 on verification failure, 2 on usage errors.
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace detkrs
