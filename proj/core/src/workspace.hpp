#pragma once

#include <cstddef>

#include "pluq/matrix.hpp"
#include "pluq/permutation.hpp"

namespace pluq::detail {

// Shared state of the in-place engines. Row and column moves always apply to
// whole rows/columns of `w`, so factors computed earlier (L to the left, U
// above) travel with the entries they belong to.
struct Workspace {
  DenseMatrix& w;
  Permutation& rows;
  Permutation& cols;
  ReductionCounter& rc;

  const PrimeField& field() const { return w.field(); }

  void rotate_rows(std::size_t first, std::size_t middle, std::size_t last) {
    w.rotate_rows(first, middle, last);
    rows.rotate(first, middle, last);
  }
  void rotate_cols(std::size_t first, std::size_t middle, std::size_t last) {
    w.rotate_cols(first, middle, last);
    cols.rotate(first, middle, last);
  }
};

// Crout elimination of the block at (r0, c0) of size m x n, whose entries
// hold the current Schur complement. Returns its rank; afterwards the block
// holds L\U in its leading rows/columns and zeros in the trailing part, and
// non-pivot rows/columns keep their relative order.
std::size_t crout_block(Workspace& ws, std::size_t r0, std::size_t m, std::size_t c0, std::size_t n);

}  // namespace pluq::detail
