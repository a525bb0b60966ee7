#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace aci::cli {

/// Exit statuses of `run`.
inline constexpr int kOk = 0;
inline constexpr int kComputationFailure = 1;
inline constexpr int kUsageError = 2;

/// Runs one command line. `args` excludes the program name; `in` backs
/// `--input -` and a missing --input.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err);

}  // namespace aci::cli
