#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace hybridlint {

/// Runs one command line. Returns 0 when clean, 1 when findings meet the
/// fail-on level, 2 on usage or operational errors.
int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace hybridlint
