#ifndef PCDYN_TOOLS_CLI_HPP_
#define PCDYN_TOOLS_CLI_HPP_

#include <iosfwd>
#include <string>
#include <vector>

namespace pcdyn::cli {

enum ExitCode { kOk = 0, kInputError = 1, kInvariantBreach = 2, kBudgetExceeded = 3 };

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);
// argv[0] is supplied.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace pcdyn::cli

#endif  // PCDYN_TOOLS_CLI_HPP_
