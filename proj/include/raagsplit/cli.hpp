#ifndef RAAGSPLIT_CLI_HPP_
#define RAAGSPLIT_CLI_HPP_

#include <iosfwd>
#include <string>
#include <vector>

namespace raagsplit {

// Exit codes of the command-line tool.
inline constexpr int kExitYes = 0;
inline constexpr int kExitNo = 1;
inline constexpr int kExitInputError = 2;

inline constexpr std::size_t kDefaultMaxVertices = 64;

// Runs one command line (args excludes the program name). Reports go to out,
// diagnostics to err.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace raagsplit

#endif  // RAAGSPLIT_CLI_HPP_
