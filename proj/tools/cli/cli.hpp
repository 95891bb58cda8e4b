#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "fockq/qarith.hpp"

namespace fockq::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitVerificationFailed = 1;
inline constexpr int kExitUsage = 2;

/// Runs one invocation; args exclude the program name. Results go to `out`
/// (or --out), diagnostics and the verify summary line to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// "7/10", "0.7", "1e-1", "0.5+0.75i", "1/2-3/4i", "i". Throws ArgumentError.
Complex parse_numeric_q(const std::string& text);

/// "start:stop:step", stop inclusive. Throws ArgumentError.
std::vector<double> parse_beta_range(const std::string& text);

}  // namespace fockq::cli
