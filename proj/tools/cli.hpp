#ifndef LEVRECON_CLI_HPP
#define LEVRECON_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace levrecon::cli {

/// Runs one CLI invocation. Returns 0 on success, 2 on validation or
/// precondition failure (single-line diagnostic on err, nothing on out),
/// 1 on internal error.
int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace levrecon::cli

#endif
