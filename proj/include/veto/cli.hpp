#ifndef VETO_CLI_HPP
#define VETO_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace veto::cli {

/// Dispatches one subcommand (core, consume, tokens, manipulate, simulate).
/// `args` excludes the program name. Returns 0 on success, 1 on invalid
/// input or arguments, 2 on an internal limit. Output is deterministic:
/// identical arguments and inputs give identical bytes.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace veto::cli

#endif
