#pragma once

#include <iosfwd>
#include <string>
#include <string_view>

#include "pluq/matrix.hpp"
#include "pluq/permutation.hpp"

namespace pluq::tools {

/// Text format: a header line "m n p", then m lines of n base-10 integers in
/// [0, p). Trailing blank lines are allowed. Throws ParseError carrying the
/// 1-based line number of the offending line.
DenseMatrix parse_matrix(std::string_view text);
std::string write_matrix(const DenseMatrix& a);

/// Text format: the size on the first line, then the 1-based images.
Permutation parse_permutation(std::string_view text);
std::string write_permutation(const Permutation& p);

/// Whole file (or standard input for "-"). Throws Error if it cannot be read.
std::string read_text(const std::string& path);
void write_text(const std::string& path, std::string_view text);

}  // namespace pluq::tools
