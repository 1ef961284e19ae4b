#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace detsum::cli {

// Runs the command line `args` (without the program name). Returns the exit
// status: 0 when the command ran (the verdict is in the report), 1 on
// input or validation errors, 2 on usage errors.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace detsum::cli
