#pragma once

// Reference implementations used only by tests. They share no code with the
// elimination engines: plain integer loops, combinatorial minors and a
// separate column-reduction routine.

#include <cstddef>
#include <cstdint>
#include <random>
#include <utility>
#include <vector>

#include "pluq/matrix.hpp"
#include "pluq/sub_permutation.hpp"

namespace pluq::testing {

using Gen = std::mt19937_64;

/// Sum of u[i]*v[i] reduced after every term.
std::uint32_t naive_dot(std::uint32_t p, const std::vector<std::uint32_t>& u, const std::vector<std::uint32_t>& v);

/// Triple loop with a reduction after every multiply and add.
DenseMatrix naive_matmul(const DenseMatrix& a, const DenseMatrix& b);

/// Determinant by cofactor expansion along the first row.
std::uint32_t det(const DenseMatrix& a);

/// Largest k having a non-zero k x k minor. Exponential; keep inputs tiny.
std::size_t rank_by_minors(const DenseMatrix& a);

/// r_ij = rank(A_ij) - rank(A_(i-1)j) - rank(A_i(j-1)) + rank(A_(i-1)(j-1))
/// over all leading sub-matrices, with ranks from `rank_fn`.
template <class RankFn>
SubPermutationMatrix rpm_by_leading_ranks(const DenseMatrix& a, RankFn rank_fn) {
  const std::size_t m = a.rows(), n = a.cols();
  std::vector<std::vector<std::size_t>> r(m + 1, std::vector<std::size_t>(n + 1, 0));
  for (std::size_t i = 1; i <= m; ++i)
    for (std::size_t j = 1; j <= n; ++j) r[i][j] = rank_fn(a.leading(i, j));
  std::vector<Pivot> pivots;
  for (std::size_t i = 1; i <= m; ++i)
    for (std::size_t j = 1; j <= n; ++j)
      if (r[i][j] + r[i - 1][j - 1] != r[i - 1][j] + r[i][j - 1]) pivots.push_back({i - 1, j - 1});
  return SubPermutationMatrix(m, n, std::move(pivots));
}

/// Column echelon form by left-to-right column reduction, row by row. Returns
/// the form and its leading-row indices.
std::pair<DenseMatrix, std::vector<std::size_t>> column_reduce(const DenseMatrix& a);

/// rank([A | C]) == rank(A) == rank(C).
bool same_column_space(const DenseMatrix& a, const DenseMatrix& c);

/// Each entry is non-zero with probability `density`, uniform otherwise.
DenseMatrix random_matrix(const PrimeField& f, std::size_t m, std::size_t n, double density, Gen& gen);
/// X * Y with X (m x r) and Y (r x n) dense random: rank at most r.
DenseMatrix random_low_rank(const PrimeField& f, std::size_t m, std::size_t n, std::size_t r, Gen& gen);
/// A mix of the above with varied shapes up to max_m x max_n, including
/// empty, zero and full-rank cases.
DenseMatrix random_mixed(const PrimeField& f, std::size_t max_m, std::size_t max_n, Gen& gen);

/// Pivots given as 1-based (row, col) pairs.
SubPermutationMatrix pivots_1based(std::size_t m, std::size_t n, std::vector<std::pair<std::size_t, std::size_t>> ones);

// Small fixed instances.
DenseMatrix four_by_four_sample(const PrimeField& f);  // rank 3, pivots (1,1) (2,3) (4,2)
DenseMatrix transposition_trap(const PrimeField& f);   // [[0,0,1],[2,3,0]]
DenseMatrix preorder_pattern(const PrimeField& f);     // 4x5 staircase, literals 1..16
DenseMatrix anti_diagonal_2x2(const PrimeField& f);

}  // namespace pluq::testing
