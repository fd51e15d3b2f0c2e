#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace edgemon::cli {

enum ExitCode : int { ok = 0, negative = 1, usage_error = 2, resource_error = 3 };

// args excludes the program name. Reads stdin only when an input is "-" or omitted.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);
int run(int argc, char** argv);

}  // namespace edgemon::cli
