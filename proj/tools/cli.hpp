#ifndef FUBINI_TOOLS_CLI_HPP
#define FUBINI_TOOLS_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace fubini::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitDomainError = 1;
inline constexpr int kExitViolation = 2;

/// Runs the command line; args excludes the program name. Output goes to
/// out, diagnostics to err.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace fubini::cli

#endif
