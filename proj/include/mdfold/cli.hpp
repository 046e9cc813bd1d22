#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace mdfold {

/// Runs one command line (args[0] is the program name). Output goes to out,
/// or to --out when given; diagnostics go to err. Exit codes: 0 success,
/// 1 domain failure (not a folding, uncorrectable word, failed check),
/// 2 usage or input error.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace mdfold
