#ifndef SPECTRO_CLI_HPP
#define SPECTRO_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace spectro {

// Exit codes of the compare subcommand.
inline constexpr int exit_bisimilar = 0;
inline constexpr int exit_distinguished = 10;
inline constexpr int exit_input_error = 2;

// Full command-line front end; argv-style arguments without the program
// name. Streams receive what would go to stdout/stderr.
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace spectro

#endif
