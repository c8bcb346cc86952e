#ifndef INFODIET_CLI_HPP_
#define INFODIET_CLI_HPP_

#include <string>
#include <vector>

namespace infodiet {

// Exit codes: 0 success, 1 validation/usage error, 2 data error.
int run_cli(const std::vector<std::string>& args);
int run_cli(int argc, const char* const* argv);

}  // namespace infodiet

#endif  // INFODIET_CLI_HPP_
