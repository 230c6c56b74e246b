#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "pluq/matrix.hpp"
#include "pluq/permutation.hpp"
#include "pluq/sub_permutation.hpp"

namespace pluq {

/// Preorders on pivot coordinates.
///   Row:     i1 <= i2
///   Col:     j1 <= j2
///   Lex:     (i1, j1) <= (i2, j2) lexicographically
///   RevLex:  (j1, i1) <= (j2, i2) lexicographically
///   Product: i1 <= i2 and j1 <= j2
enum class SearchOrder { Row, Col, Lex, RevLex, Product };
enum class PermStrategy { Transposition, Rotation };

std::string_view to_string(SearchOrder o) noexcept;
std::string_view to_string(PermStrategy s) noexcept;
/// Accepts the CLI spellings row|col|lex|revlex|product and trans|rot.
std::optional<SearchOrder> parse_search_order(std::string_view s) noexcept;
std::optional<PermStrategy> parse_perm_strategy(std::string_view s) noexcept;

using PivotChoice = Pivot;

/// a precedes-or-equals b under `order`.
bool precedes_or_equal(SearchOrder order, Pivot a, Pivot b) noexcept;
/// a strictly precedes b: a <= b and not b <= a.
bool strictly_precedes(SearchOrder order, Pivot a, Pivot b) noexcept;

/// Every non-zero of the working region A[k.., k..] that no other non-zero of
/// the region strictly precedes. Coordinates are absolute. Sorted
/// lexicographically.
std::vector<PivotChoice> minimal_pivots(const DenseMatrix& a, std::size_t k, SearchOrder order);

/// The pivot an elimination picks after k pivots, or nullopt if the working
/// region is zero. Ties: Row picks the leftmost entry of the first non-zero
/// row, Col the topmost of the first non-zero column, Product the
/// lexicographically smallest minimal element.
std::optional<PivotChoice> search_pivot(const DenseMatrix& a, std::size_t k, SearchOrder order);

/// Brings `choice` to (k, k) by permuting whole rows and columns of `a`,
/// right-composing the same moves into the accumulated permutations.
void move_pivot(Permutation& row_acc, Permutation& col_acc, PivotChoice choice, std::size_t k,
                PermStrategy row_strategy, PermStrategy col_strategy, DenseMatrix& a);

/// P [I_r 0; 0 0] Q: pivots at (P[t], Q[t]) for t < r.
/// Throws InvalidArgument when r exceeds either dimension.
SubPermutationMatrix pivoting_matrix(const Permutation& p, const Permutation& q, std::size_t r);

/// What a (search, row permutation, column permutation) combination is known
/// to reveal.
struct RevealClaims {
  bool row_profile = false;
  bool col_profile = false;
  bool rank_profile_matrix = false;
  bool row_monotone = false;
  bool col_monotone = false;
};

struct StrategyRow {
  SearchOrder search;
  PermStrategy row_perm;
  PermStrategy col_perm;
  RevealClaims claims;
};

/// The eleven classified combinations.
std::span<const StrategyRow> strategy_table() noexcept;

/// Claims for a combination, or nullopt when it is not classified.
std::optional<RevealClaims> claims_for(SearchOrder s, PermStrategy row, PermStrategy col) noexcept;

}  // namespace pluq
