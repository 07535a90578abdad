#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "ginicor/oracles.hpp"

namespace ginicor::cli {

/// Runs one command line (args excludes the program name). Reports go to
/// `out` (or the --output file), diagnostics to `err`. Returns the exit code:
/// 0 success, 1 usage, 2 data, 3 numeric or degenerate input.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Parses a mixture such as "0.5 exp(1) + 0.5 exp(4)". Components:
/// exp(scale), normal(mean, sd), cauchy(location, scale), mvn(dim). Weights
/// may be omitted on every term for equal weights.
MixtureSpec parse_mixture(const std::string& text);

/// Value rounded to 12 significant digits.
double round12(double value);

}  // namespace ginicor::cli
