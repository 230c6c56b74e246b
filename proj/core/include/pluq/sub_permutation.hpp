#pragma once

#include <compare>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "pluq/matrix.hpp"

namespace pluq {

/// 0-based coordinate of a non-zero entry.
struct Pivot {
  std::size_t row = 0;
  std::size_t col = 0;
  friend auto operator<=>(const Pivot&, const Pivot&) = default;
};

/// Sorted, distinct indices of linearly independent rows or columns.
using RankProfile = std::vector<std::size_t>;

/// An m x n 0/1 matrix with r ones, no two in the same row or column.
/// Houses rank profile matrices, pivoting matrices and the E of an LEU.
class SubPermutationMatrix {
 public:
  SubPermutationMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols) {}
  /// Throws InvalidArgument on repeated rows/columns or out-of-range pivots.
  SubPermutationMatrix(std::size_t rows, std::size_t cols, std::vector<Pivot> pivots);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  std::size_t rank() const noexcept { return pivots_.size(); }
  /// Pivots ordered by row.
  const std::vector<Pivot>& pivots() const noexcept { return pivots_; }

  RankProfile row_support() const;
  RankProfile col_support() const;
  std::pair<RankProfile, RankProfile> supports() const { return {row_support(), col_support()}; }

  DenseMatrix expand(const PrimeField& field) const;

  /// "r pivots: (i,j) ..." with 1-based coordinates.
  std::string to_string() const;

  friend bool operator==(const SubPermutationMatrix&, const SubPermutationMatrix&) = default;

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Pivot> pivots_;
};

}  // namespace pluq
