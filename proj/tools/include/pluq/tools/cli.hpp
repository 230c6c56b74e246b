#pragma once

#include <cstddef>
#include <iosfwd>
#include <string>
#include <vector>

namespace pluq::tools {

enum ExitCode : int { kSuccess = 0, kVerificationFailure = 1, kInputError = 2 };

/// Arithmetic cost estimate of an m x n rank-r factorization:
/// 2mnr + (2/3)r^3 - r^2(m + n).
double bench_cost(std::size_t m, std::size_t n, std::size_t r);

/// Runs one invocation. `args` excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace pluq::tools
