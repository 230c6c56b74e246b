#include "pluq/elimination.hpp"

#include <algorithm>
#include <vector>

#include "pluq/errors.hpp"
#include "workspace.hpp"

namespace pluq {

std::string Strategy::name() const {
  switch (engine) {
    case Engine::CroutLex: return "crout";
    case Engine::TileRecursive: return "recursive(threshold=" + std::to_string(threshold) + ")";
    case Engine::LeftLookingProduct: return "left";
    case Engine::RightLookingProduct: return "right";
    case Engine::Iterative: break;
  }
  return "iter(" + std::string(to_string(search)) + "," + std::string(to_string(row_perm)) + "," +
         std::string(to_string(col_perm)) + ")";
}

DenseMatrix PluqFactors::reconstruct() const {
  const DenseMatrix lu = matmul(L, U);
  DenseMatrix a(lu.field(), rows(), cols());
  for (std::size_t t = 0; t < rows(); ++t)
    for (std::size_t u = 0; u < cols(); ++u) a(P[t], Q[u]) = lu(t, u);
  return a;
}

EliminationState::EliminationState(DenseMatrix a)
    : work(std::move(a)),
      row_acc(Permutation::identity(work.rows())),
      col_acc(Permutation::identity(work.cols())) {}

PluqFactors EliminationState::finish(Strategy strategy) const {
  const PrimeField& f = work.field();
  const std::size_t m = work.rows(), n = work.cols(), r = k;
  DenseMatrix l(f, m, r), u(f, r, n);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < std::min(i, r); ++j) l(i, j) = work(i, j);
  for (std::size_t t = 0; t < r; ++t) {
    l(t, t) = f.one();
    for (std::size_t j = t; j < n; ++j) u(t, j) = work(t, j);
  }
  return {row_acc, col_acc, std::move(l), std::move(u), r, strategy, counter.count()};
}

namespace detail {

std::size_t crout_block(Workspace& ws, std::size_t r0, std::size_t m, std::size_t c0, std::size_t n) {
  const PrimeField& f = ws.field();
  DenseMatrix& w = ws.w;
  std::size_t k = 0;
  for (std::size_t i = 0; i < m && k < n; ++i) {
    const std::size_t gi = r0 + i;
    if (k > 0) {
      const auto l_row = w.row_segment(gi, c0, k);
      for (std::size_t j = k; j < n; ++j) {
        const FieldElement d = f.dot_accumulate(l_row, w.column(c0 + j, r0, k), &ws.rc);
        w(gi, c0 + j) = f.sub(w(gi, c0 + j), d, &ws.rc);
      }
    }
    std::size_t s = k;
    while (s < n && w(gi, c0 + s).is_zero()) ++s;
    if (s == n) continue;

    const FieldElement pivot_inv = f.inv(w(gi, c0 + s), &ws.rc);
    for (std::size_t t = i + 1; t < m; ++t) {
      const std::size_t gt = r0 + t;
      FieldElement v = w(gt, c0 + s);
      if (k > 0)
        v = f.sub(v, f.dot_accumulate(w.row_segment(gt, c0, k), w.column(c0 + s, r0, k), &ws.rc),
                  &ws.rc);
      w(gt, c0 + s) = f.mul(v, pivot_inv, &ws.rc);
    }
    ws.rotate_cols(c0 + k, c0 + s, c0 + s + 1);
    ws.rotate_rows(r0 + k, gi, gi + 1);
    ++k;
  }
  // Stopping at k == n is safe: rows not reached have no trailing part and
  // their L entries were filled in when each pivot was found.
  return k;
}

}  // namespace detail

namespace {

// Right-looking elimination with a caller-chosen pivot search.
PluqFactors right_looking(const DenseMatrix& a, SearchOrder order, PermStrategy row_strategy,
                          PermStrategy col_strategy, Strategy tag) {
  EliminationState st(a);
  const PrimeField& f = a.field();
  DenseMatrix& w = st.work;
  const std::size_t m = w.rows(), n = w.cols();
  while (st.k < std::min(m, n)) {
    const auto choice = search_pivot(w, st.k, order);
    if (!choice) break;
    const std::size_t k = st.k;
    move_pivot(st.row_acc, st.col_acc, *choice, k, row_strategy, col_strategy, w);
    const FieldElement pivot_inv = f.inv(w(k, k), &st.counter);
    for (std::size_t i = k + 1; i < m; ++i) {
      const FieldElement l = f.mul(w(i, k), pivot_inv, &st.counter);
      w(i, k) = l;
      for (std::size_t j = k + 1; j < n; ++j)
        w(i, j) = f.sub(w(i, j), f.mul(l, w(k, j), &st.counter), &st.counter);
    }
    ++st.k;
  }
  return st.finish(tag);
}

}  // namespace

PluqFactors pluq_iterative(const DenseMatrix& a, SearchOrder order, PermStrategy row_strategy,
                           PermStrategy col_strategy) {
  return right_looking(a, order, row_strategy, col_strategy,
                       Strategy::iterative(order, row_strategy, col_strategy));
}

PluqFactors pluq_right_looking_product(const DenseMatrix& a) {
  return right_looking(a, SearchOrder::Product, PermStrategy::Rotation, PermStrategy::Rotation,
                       Strategy::right_looking_product());
}

PluqFactors pluq_crout_lex(const DenseMatrix& a) {
  EliminationState st(a);
  detail::Workspace ws{st.work, st.row_acc, st.col_acc, st.counter};
  st.k = detail::crout_block(ws, 0, a.rows(), 0, a.cols());
  return st.finish(Strategy::crout_lex());
}

PluqFactors pluq_left_looking_product(const DenseMatrix& a) {
  EliminationState st(a);
  const PrimeField& f = a.field();
  DenseMatrix& w = st.work;
  const std::size_t m = w.rows(), n = w.cols();
  std::vector<FieldElement> pivot_inv;
  std::size_t& k = st.k;
  // Every row is visited, even once k == n: its L part is only computed here.
  for (std::size_t i = 0; i < m; ++i) {
    // L part of row i: forward substitution against U[0..k, 0..k].
    for (std::size_t t = 0; t < k; ++t) {
      FieldElement v = w(i, t);
      if (t > 0)
        v = f.sub(v, f.dot_accumulate(w.row_segment(i, 0, t), w.column(t, 0, t), &st.counter),
                  &st.counter);
      w(i, t) = f.mul(v, pivot_inv[t], &st.counter);
    }
    if (k == n) continue;
    // Trailing part of row i.
    if (k > 0) {
      const auto l_row = w.row_segment(i, 0, k);
      for (std::size_t j = k; j < n; ++j)
        w(i, j) = f.sub(w(i, j), f.dot_accumulate(l_row, w.column(j, 0, k), &st.counter),
                        &st.counter);
    }
    // Rows k..i-1 of the working region are zero and rows below i are not
    // updated yet, so the product-order minimum (lexicographic tie-break) is
    // the leftmost non-zero of row i, if any.
    std::size_t s = k;
    while (s < n && w(i, s).is_zero()) ++s;
    if (s == n) continue;
    move_pivot(st.row_acc, st.col_acc, {i, s}, k, PermStrategy::Rotation, PermStrategy::Rotation, w);
    pivot_inv.push_back(f.inv(w(k, k), &st.counter));
    ++k;
  }
  return st.finish(Strategy::left_looking_product());
}

PluqFactors pluq(const DenseMatrix& a, const Strategy& s) {
  switch (s.engine) {
    case Engine::Iterative: return pluq_iterative(a, s.search, s.row_perm, s.col_perm);
    case Engine::CroutLex: return pluq_crout_lex(a);
    case Engine::TileRecursive: return pluq_tile_recursive(a, s.threshold);
    case Engine::LeftLookingProduct: return pluq_left_looking_product(a);
    case Engine::RightLookingProduct: return pluq_right_looking_product(a);
  }
  throw InvalidArgument("unknown engine");
}

}  // namespace pluq
