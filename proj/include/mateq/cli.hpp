#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace mateq {

/// Run the command-line interface on the given arguments (program name
/// excluded), writing reports to out and diagnostics to err.
/// Exit codes: 0 success / consistent / reproductive, 2 negative verdict
/// (inconsistent or not reproductive), 1 any error.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace mateq
