#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace gcakit::cli {

/// Runs one command line (without the program name). Returns 0 on success,
/// 1 when a verification check fails (output still written) and 2 on
/// malformed input, with a one-line JSON error on err.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace gcakit::cli
