#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace rht::cli {

// Runs one CLI invocation. Returns 0 on success, 2 on invalid input and
// 1 on internal errors. Identical arguments produce byte-identical output.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace rht::cli
