#ifndef MTCRANK_TOOLS_CLI_HPP
#define MTCRANK_TOOLS_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace mtcrank::cli
{

/// Runs one command line (without the program name). Returns the process
/// exit status: 0 success, 1 domain failure, 2 usage or parse error.
int run(std::vector<std::string> const &args, std::ostream &out, std::ostream &err);

} // namespace mtcrank::cli

#endif
