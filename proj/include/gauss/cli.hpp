#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace gauss::cli {

// args[0] is the program name. Returns the process exit code: 0 success,
// 1 for a "not constructible" verdict, 2 for usage or input errors (with
// usage text on `err`).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace gauss::cli
