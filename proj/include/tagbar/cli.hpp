#ifndef TAGBAR_CLI_HPP
#define TAGBAR_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace tagbar
{

/// Runs the command line tool. `args` excludes the program name.
/// Returns 0 on success, 1 on a validation failure, 2 on a parse error.
int run_cli(std::vector<std::string> const& args, std::ostream& out, std::ostream& err);

} // namespace tagbar

#endif // TAGBAR_CLI_HPP
