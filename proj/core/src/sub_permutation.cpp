#include "pluq/sub_permutation.hpp"

#include <algorithm>
#include <sstream>

#include "pluq/errors.hpp"

namespace pluq {

SubPermutationMatrix::SubPermutationMatrix(std::size_t rows, std::size_t cols,
                                           std::vector<Pivot> pivots)
    : rows_(rows), cols_(cols), pivots_(std::move(pivots)) {
  std::vector<bool> row_used(rows_, false), col_used(cols_, false);
  for (const Pivot& p : pivots_) {
    if (p.row >= rows_ || p.col >= cols_)
      throw InvalidArgument("pivot outside " + std::to_string(rows_) + "x" + std::to_string(cols_));
    if (row_used[p.row] || col_used[p.col])
      throw InvalidArgument("two pivots share a row or a column");
    row_used[p.row] = col_used[p.col] = true;
  }
  std::sort(pivots_.begin(), pivots_.end());
}

RankProfile SubPermutationMatrix::row_support() const {
  RankProfile out;
  for (const Pivot& p : pivots_) out.push_back(p.row);
  return out;  // already sorted by row
}

RankProfile SubPermutationMatrix::col_support() const {
  RankProfile out;
  for (const Pivot& p : pivots_) out.push_back(p.col);
  std::sort(out.begin(), out.end());
  return out;
}

DenseMatrix SubPermutationMatrix::expand(const PrimeField& field) const {
  DenseMatrix m(field, rows_, cols_);
  for (const Pivot& p : pivots_) m(p.row, p.col) = field.one();
  return m;
}

std::string SubPermutationMatrix::to_string() const {
  std::ostringstream os;
  os << pivots_.size() << " pivots:";
  for (const Pivot& p : pivots_) os << " (" << p.row + 1 << "," << p.col + 1 << ")";
  return os.str();
}

}  // namespace pluq
