#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace sodlab::cli {

/* Runs one sodlab invocation; args exclude the program name.
 * Returns 0 when every check passed, 1 when any failed, 2 on usage errors. */
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace sodlab::cli
