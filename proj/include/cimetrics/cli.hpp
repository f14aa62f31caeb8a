#ifndef CIMETRICS_CLI_HPP
#define CIMETRICS_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace cimetrics::cli {

/// Runs the ci-metrics command line (args = argv without the program name).
/// Exit codes: 0 success, 2 usage error, 3 data validation error, 4 numeric
/// domain error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace cimetrics::cli

#endif  // CIMETRICS_CLI_HPP
