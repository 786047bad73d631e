#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace qform::cli {

// Runs the qform command line. All results go to `out`, diagnostics to
// `err`. Exit code 0 = success, 1 = input/validation error, 2 = violated
// arithmetic invariant.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace qform::cli
