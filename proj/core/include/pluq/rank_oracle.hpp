#pragma once

#include "pluq/matrix.hpp"
#include "pluq/sub_permutation.hpp"

// Brute-force ground truth. Nothing here calls into the elimination engines;
// it is slow on purpose and meant for validation at small dimensions.
namespace pluq::oracle {

/// Rank by textbook Gaussian elimination on a private copy.
std::size_t rank(const DenseMatrix& a);

/// Lexicographically smallest sequence of independent rows, found by keeping
/// each row that enlarges the span of the rows kept so far.
RankProfile row_rank_profile(const DenseMatrix& a);
RankProfile col_rank_profile(const DenseMatrix& a);

/// The rank profile matrix, built row by row: when row i raises the rank of
/// the leading rows, its pivot goes to the smallest column k such that
/// rank(A[0..i, 0..k]) = rank(A[0..i-1, 0..k]) + 1.
SubPermutationMatrix rank_profile_matrix(const DenseMatrix& a);

}  // namespace pluq::oracle
