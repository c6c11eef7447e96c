#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace symvec::cli {

// Full command-line surface, callable in-process for tests. `args` excludes
// the program name. Returns the process exit code: 0 ok, 1 domain error,
// 2 config error, 3 backend error; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace symvec::cli
