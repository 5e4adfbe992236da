#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace uflip::cli {

/// Runs the command line; returns 0 when everything requested passed, 1 on a
/// verification failure (a counterexample is printed) and 2 on usage errors.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace uflip::cli
