#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace dendrikit::cli {

/// Runs one CLI invocation. Exit codes follow the `check` contract:
/// 0 success/valid, 1 invalid or failed verification, 2 parse/schema/usage
/// error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace dendrikit::cli
