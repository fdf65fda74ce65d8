#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace limitrep::cli {

// exit codes: 0 = report produced, 1 = a checked certificate came back
// false, 2 = invalid input or a bound was exceeded
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace limitrep::cli
