#include <algorithm>
#include <vector>

#include "pluq/elimination.hpp"
#include "pluq/errors.hpp"
#include "workspace.hpp"

namespace pluq {
namespace {

using detail::Workspace;

struct Rect {
  std::size_t r0, m, c0, n;
};

// B <- L^{-1} B, with L the unit lower triangle of the r x r block at
// (lr0, lc0) and B the r x cols block at (br0, bc0).
void solve_unit_lower_left(Workspace& ws, std::size_t lr0, std::size_t lc0, std::size_t r,
                           std::size_t br0, std::size_t bc0, std::size_t cols) {
  const PrimeField& f = ws.field();
  DenseMatrix& w = ws.w;
  for (std::size_t t = 1; t < r; ++t) {
    const auto l_row = w.row_segment(lr0 + t, lc0, t);
    for (std::size_t j = 0; j < cols; ++j) {
      const FieldElement d = f.dot_accumulate(l_row, w.column(bc0 + j, br0, t), &ws.rc);
      w(br0 + t, bc0 + j) = f.sub(w(br0 + t, bc0 + j), d, &ws.rc);
    }
  }
}

// B <- B U^{-1}, with U the upper triangle (non-zero diagonal) of the r x r
// block at (ur0, uc0) and B the rows [br0, br0 + rows) of columns bc0..bc0+r.
void solve_upper_right(Workspace& ws, std::size_t ur0, std::size_t uc0, std::size_t r,
                       std::size_t br0, std::size_t bc0, std::size_t rows) {
  if (r == 0 || rows == 0) return;
  const PrimeField& f = ws.field();
  DenseMatrix& w = ws.w;
  std::vector<FieldElement> diag_inv(r);
  for (std::size_t t = 0; t < r; ++t) diag_inv[t] = f.inv(w(ur0 + t, uc0 + t), &ws.rc);
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t t = 0; t < r; ++t) {
      FieldElement v = w(br0 + i, bc0 + t);
      if (t > 0)
        v = f.sub(v, f.dot_accumulate(w.row_segment(br0 + i, bc0, t), w.column(uc0 + t, ur0, t), &ws.rc),
                  &ws.rc);
      w(br0 + i, bc0 + t) = f.mul(v, diag_inv[t], &ws.rc);
    }
  }
}

// C -= A * B where A is the c.m x inner block at (c.r0, a_c0) and B the
// inner x c.n block at (b_r0, c.c0).
void schur_update(Workspace& ws, Rect c, std::size_t a_c0, std::size_t b_r0, std::size_t inner) {
  if (inner == 0) return;
  const PrimeField& f = ws.field();
  DenseMatrix& w = ws.w;
  for (std::size_t i = 0; i < c.m; ++i) {
    const auto a_row = w.row_segment(c.r0 + i, a_c0, inner);
    for (std::size_t j = 0; j < c.n; ++j) {
      const FieldElement d = f.dot_accumulate(a_row, w.column(c.c0 + j, b_r0, inner), &ws.rc);
      w(c.r0 + i, c.c0 + j) = f.sub(w(c.r0 + i, c.c0 + j), d, &ws.rc);
    }
  }
}

// Factors the block `v` in place; same contract as detail::crout_block.
//
//   A = [A11 A12]   A11 is ceil(m/2) x ceil(n/2)
//       [A21 A22]
//
// After eliminating A11 (rank r1) and updating its neighbours, the remaining
// Schur complement is
//
//   H = [ 0   H12 ]
//       [ H21 H22 ]
//
// H12 and H21 are eliminated independently, H22 is updated with both sets of
// pivots, and what is left of it (H4) is eliminated last. Block rotations
// then gather the pivots in the order A11, H12, H21, H4 in front of the
// non-pivot rows and columns, which keep their relative order.
std::size_t tile_block(Workspace& ws, Rect v, std::size_t threshold) {
  if (v.m == 0 || v.n == 0) return 0;
  if (std::max(v.m, v.n) <= threshold) return detail::crout_block(ws, v.r0, v.m, v.c0, v.n);

  const std::size_t m1 = (v.m + 1) / 2, n1 = (v.n + 1) / 2;
  const std::size_t m2 = v.m - m1, n2 = v.n - n1;
  const std::size_t R = v.r0, C = v.c0;

  const std::size_t r1 = tile_block(ws, {R, m1, C, n1}, threshold);

  // U part of A12 and L part of A21.
  solve_unit_lower_left(ws, R, C, r1, R, C + n1, n2);
  solve_upper_right(ws, R, C, r1, R + m1, C, m2);
  // H12, H21 and the first update of H22.
  schur_update(ws, {R + r1, m1 - r1, C + n1, n2}, C, R, r1);
  schur_update(ws, {R + m1, m2, C + r1, n1 - r1}, C, R, r1);
  schur_update(ws, {R + m1, m2, C + n1, n2}, C, R, r1);

  const std::size_t r2 = tile_block(ws, {R + r1, m1 - r1, C + n1, n2}, threshold);
  const std::size_t r3 = tile_block(ws, {R + m1, m2, C + r1, n1 - r1}, threshold);

  // Eliminate the H12 pivots from H22: L part in their columns, then the
  // update of the remaining columns.
  solve_upper_right(ws, R + r1, C + n1, r2, R + m1, C + n1, m2);
  schur_update(ws, {R + m1, m2, C + n1 + r2, n2 - r2}, C + n1, R + r1, r2);
  // Then the H21 pivots: U part of their rows, update of the rows below.
  solve_unit_lower_left(ws, R + m1, C + r1, r3, R + m1, C + n1 + r2, n2 - r2);
  schur_update(ws, {R + m1 + r3, m2 - r3, C + n1 + r2, n2 - r2}, C + r1, R + m1, r3);

  const std::size_t r4 = tile_block(ws, {R + m1 + r3, m2 - r3, C + n1 + r2, n2 - r2}, threshold);

  // Rows:    [A11 | H12 | top rest | H21 | H4 | bottom rest]
  //       -> [A11 | H12 | H21 | H4 | top rest | bottom rest]
  ws.rotate_rows(R + r1 + r2, R + m1, R + m1 + r3 + r4);
  // Cols:    [A11 | H21 | left rest | H12 | H4 | right rest]
  //       -> [A11 | H12 | H21 | H4 | left rest | right rest]
  ws.rotate_cols(C + r1, C + n1, C + n1 + r2);
  ws.rotate_cols(C + r1 + r2 + r3, C + n1 + r2, C + n1 + r2 + r4);

  return r1 + r2 + r3 + r4;
}

}  // namespace

PluqFactors pluq_tile_recursive(const DenseMatrix& a, std::size_t threshold) {
  if (threshold == 0) throw InvalidArgument("tile-recursive threshold must be at least 1");
  EliminationState st(a);
  Workspace ws{st.work, st.row_acc, st.col_acc, st.counter};
  st.k = tile_block(ws, {0, a.rows(), 0, a.cols()}, threshold);
  return st.finish(Strategy::tile_recursive(threshold));
}

}  // namespace pluq
