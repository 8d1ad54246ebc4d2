#ifndef TPV_TOOLS_CLI_HPP
#define TPV_TOOLS_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace tpv::cli {

// Exit codes: 0 verified / not-applicable, 1 violated, 2 skipped, 3 usage.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace tpv::cli

#endif  // TPV_TOOLS_CLI_HPP
