#include "pluq/pivoting.hpp"

#include <algorithm>
#include <array>
#include <limits>

#include "pluq/errors.hpp"

namespace pluq {

std::string_view to_string(SearchOrder o) noexcept {
  switch (o) {
    case SearchOrder::Row: return "row";
    case SearchOrder::Col: return "col";
    case SearchOrder::Lex: return "lex";
    case SearchOrder::RevLex: return "revlex";
    case SearchOrder::Product: return "product";
  }
  return "?";
}

std::string_view to_string(PermStrategy s) noexcept {
  return s == PermStrategy::Rotation ? "rot" : "trans";
}

std::optional<SearchOrder> parse_search_order(std::string_view s) noexcept {
  for (SearchOrder o : {SearchOrder::Row, SearchOrder::Col, SearchOrder::Lex, SearchOrder::RevLex,
                        SearchOrder::Product})
    if (s == to_string(o)) return o;
  return std::nullopt;
}

std::optional<PermStrategy> parse_perm_strategy(std::string_view s) noexcept {
  if (s == "trans") return PermStrategy::Transposition;
  if (s == "rot") return PermStrategy::Rotation;
  return std::nullopt;
}

bool precedes_or_equal(SearchOrder order, Pivot a, Pivot b) noexcept {
  switch (order) {
    case SearchOrder::Row: return a.row <= b.row;
    case SearchOrder::Col: return a.col <= b.col;
    case SearchOrder::Lex: return a.row < b.row || (a.row == b.row && a.col <= b.col);
    case SearchOrder::RevLex: return a.col < b.col || (a.col == b.col && a.row <= b.row);
    case SearchOrder::Product: return a.row <= b.row && a.col <= b.col;
  }
  return false;
}

bool strictly_precedes(SearchOrder order, Pivot a, Pivot b) noexcept {
  return precedes_or_equal(order, a, b) && !precedes_or_equal(order, b, a);
}

namespace {

std::optional<std::size_t> first_nonzero_row(const DenseMatrix& a, std::size_t k) {
  for (std::size_t i = k; i < a.rows(); ++i)
    for (std::size_t j = k; j < a.cols(); ++j)
      if (!a(i, j).is_zero()) return i;
  return std::nullopt;
}

std::optional<std::size_t> first_nonzero_col(const DenseMatrix& a, std::size_t k) {
  for (std::size_t j = k; j < a.cols(); ++j)
    for (std::size_t i = k; i < a.rows(); ++i)
      if (!a(i, j).is_zero()) return j;
  return std::nullopt;
}

}  // namespace

std::vector<PivotChoice> minimal_pivots(const DenseMatrix& a, std::size_t k, SearchOrder order) {
  std::vector<PivotChoice> out;
  switch (order) {
    case SearchOrder::Row:
    case SearchOrder::Lex:
      if (auto i = first_nonzero_row(a, k)) {
        for (std::size_t j = k; j < a.cols(); ++j)
          if (!a(*i, j).is_zero()) {
            out.push_back({*i, j});
            if (order == SearchOrder::Lex) break;
          }
      }
      break;
    case SearchOrder::Col:
    case SearchOrder::RevLex:
      if (auto j = first_nonzero_col(a, k)) {
        for (std::size_t i = k; i < a.rows(); ++i)
          if (!a(i, *j).is_zero()) {
            out.push_back({i, *j});
            if (order == SearchOrder::RevLex) break;
          }
      }
      break;
    case SearchOrder::Product: {
      // Staircase: the leftmost non-zero of a row is minimal iff it lies
      // strictly left of every earlier row's leftmost non-zero.
      std::size_t bound = a.cols();
      for (std::size_t i = k; i < a.rows() && bound > k; ++i)
        for (std::size_t j = k; j < bound; ++j)
          if (!a(i, j).is_zero()) {
            out.push_back({i, j});
            bound = j;
            break;
          }
      break;
    }
  }
  return out;
}

std::optional<PivotChoice> search_pivot(const DenseMatrix& a, std::size_t k, SearchOrder order) {
  switch (order) {
    case SearchOrder::Row:
    case SearchOrder::Lex:
    case SearchOrder::Product:
      // The lexicographic minimum of the region is product-minimal and the
      // leftmost entry of the first non-zero row.
      if (auto i = first_nonzero_row(a, k)) {
        for (std::size_t j = k; j < a.cols(); ++j)
          if (!a(*i, j).is_zero()) return PivotChoice{*i, j};
      }
      return std::nullopt;
    case SearchOrder::Col:
    case SearchOrder::RevLex:
      if (auto j = first_nonzero_col(a, k)) {
        for (std::size_t i = k; i < a.rows(); ++i)
          if (!a(i, *j).is_zero()) return PivotChoice{i, *j};
      }
      return std::nullopt;
  }
  return std::nullopt;
}

void move_pivot(Permutation& row_acc, Permutation& col_acc, PivotChoice choice, std::size_t k,
                PermStrategy row_strategy, PermStrategy col_strategy, DenseMatrix& a) {
  if (row_strategy == PermStrategy::Rotation) {
    a.rotate_rows(k, choice.row);
    row_acc.rotate(k, choice.row);
  } else {
    a.swap_rows(k, choice.row);
    row_acc.swap(k, choice.row);
  }
  if (col_strategy == PermStrategy::Rotation) {
    a.rotate_cols(k, choice.col);
    col_acc.rotate(k, choice.col);
  } else {
    a.swap_cols(k, choice.col);
    col_acc.swap(k, choice.col);
  }
}

SubPermutationMatrix pivoting_matrix(const Permutation& p, const Permutation& q, std::size_t r) {
  if (r > p.size() || r > q.size())
    throw InvalidArgument("rank " + std::to_string(r) + " exceeds " + std::to_string(p.size()) +
                          "x" + std::to_string(q.size()));
  std::vector<Pivot> pivots;
  pivots.reserve(r);
  for (std::size_t t = 0; t < r; ++t) pivots.push_back({p[t], q[t]});
  return SubPermutationMatrix(p.size(), q.size(), std::move(pivots));
}

namespace {

constexpr PermStrategy T = PermStrategy::Transposition;
constexpr PermStrategy R = PermStrategy::Rotation;

//                                   RowRP  ColRP  R_A    row    col
constexpr RevealClaims kRowOnly{true, false, false, false, false};
constexpr RevealClaims kColOnly{false, true, false, false, false};
constexpr RevealClaims kAllColMono{true, true, true, false, true};
constexpr RevealClaims kAllRowMono{true, true, true, true, false};
constexpr RevealClaims kAllBothMono{true, true, true, true, true};
constexpr RevealClaims kRowRowMono{true, false, false, true, false};
constexpr RevealClaims kColColMono{false, true, false, false, true};

constexpr std::array<StrategyRow, 11> kTable{{
    {SearchOrder::Row, T, T, kRowOnly},
    {SearchOrder::Col, T, T, kColOnly},
    {SearchOrder::Lex, T, T, kRowOnly},
    {SearchOrder::Lex, T, R, kAllColMono},
    {SearchOrder::Lex, R, R, kAllBothMono},
    {SearchOrder::RevLex, T, T, kColOnly},
    {SearchOrder::RevLex, R, T, kAllRowMono},
    {SearchOrder::RevLex, R, R, kAllBothMono},
    {SearchOrder::Product, R, T, kRowRowMono},
    {SearchOrder::Product, T, R, kColColMono},
    {SearchOrder::Product, R, R, kAllBothMono},
}};

}  // namespace

std::span<const StrategyRow> strategy_table() noexcept { return kTable; }

std::optional<RevealClaims> claims_for(SearchOrder s, PermStrategy row, PermStrategy col) noexcept {
  for (const StrategyRow& r : kTable)
    if (r.search == s && r.row_perm == row && r.col_perm == col) return r.claims;
  return std::nullopt;
}

}  // namespace pluq
