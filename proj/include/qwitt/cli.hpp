#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace qwitt {

/// Runs the qwitt command line. args excludes the program name.
/// Returns 0 on success, 1 when a verification fails, 2 on usage errors.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace qwitt
