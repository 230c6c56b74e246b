#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>

#include "pluq/matrix.hpp"
#include "pluq/permutation.hpp"
#include "pluq/pivoting.hpp"
#include "pluq/sub_permutation.hpp"

namespace pluq {

enum class Engine {
  Iterative,            // right-looking, any search and permutation pair
  CroutLex,             // lexicographic search, rotations, Crout schedule
  TileRecursive,        // quadrant splitting, Crout base case
  LeftLookingProduct,   // product search, rotations, rows updated on arrival
  RightLookingProduct,  // product search, rotations, full trailing update
};

struct Strategy {
  Engine engine = Engine::CroutLex;
  SearchOrder search = SearchOrder::Lex;
  PermStrategy row_perm = PermStrategy::Rotation;
  PermStrategy col_perm = PermStrategy::Rotation;
  std::size_t threshold = 64;  // TileRecursive only

  static Strategy iterative(SearchOrder s, PermStrategy row, PermStrategy col) {
    return {Engine::Iterative, s, row, col};
  }
  static Strategy crout_lex() { return {Engine::CroutLex, SearchOrder::Lex}; }
  static Strategy tile_recursive(std::size_t threshold) {
    return {Engine::TileRecursive, SearchOrder::Product, PermStrategy::Rotation,
            PermStrategy::Rotation, threshold};
  }
  static Strategy left_looking_product() { return {Engine::LeftLookingProduct, SearchOrder::Product}; }
  static Strategy right_looking_product() { return {Engine::RightLookingProduct, SearchOrder::Product}; }

  /// Rank-profile guarantees of the underlying search/permutation pair.
  std::optional<RevealClaims> claims() const { return claims_for(search, row_perm, col_perm); }
  bool reveals_rank_profile_matrix() const {
    auto c = claims();
    return c && c->rank_profile_matrix;
  }
  std::string name() const;
};

/// A = P * L * U * Q with L (m x r) unit lower trapezoidal and U (r x n)
/// upper trapezoidal with a non-zero diagonal.
struct PluqFactors {
  Permutation P;
  Permutation Q;
  DenseMatrix L;
  DenseMatrix U;
  std::size_t rank = 0;
  Strategy strategy;
  std::uint64_t reductions = 0;

  std::size_t rows() const noexcept { return P.size(); }
  std::size_t cols() const noexcept { return Q.size(); }

  /// Original positions of the pivots: (P[t], Q[t]) for t < r.
  SubPermutationMatrix pivoting_matrix() const { return pluq::pivoting_matrix(P, Q, rank); }
  /// P * L * U * Q.
  DenseMatrix reconstruct() const;
  /// Dense permutation matrices of the outer factors.
  DenseMatrix left_factor() const { return P.matrix(L.field()).transpose(); }
  DenseMatrix right_factor() const { return Q.matrix(U.field()); }
  /// True iff P[r..m) (resp. Q[r..n)) keeps the non-pivot rows (columns) in
  /// their original order.
  bool rows_monotone() const { return P.is_k_monotone(rank); }
  bool cols_monotone() const { return Q.is_k_monotone(rank); }
};

/// In-place elimination state: `work` holds L below and U on/above the
/// diagonal of its first k rows and columns, and the trailing Schur
/// complement (or, for delayed schedules, its not yet updated preimage).
struct EliminationState {
  DenseMatrix work;
  Permutation row_acc;
  Permutation col_acc;
  std::size_t k = 0;
  ReductionCounter counter;

  explicit EliminationState(DenseMatrix a);
  /// Splits `work` into L and U. The trailing block must be zero.
  PluqFactors finish(Strategy strategy) const;
};

/// Right-looking elimination, one pivot per step, under any strategy pair.
PluqFactors pluq_iterative(const DenseMatrix& a, SearchOrder order, PermStrategy row_strategy,
                           PermStrategy col_strategy);

/// Crout elimination with lexicographic search and row/column rotations.
/// Each row is brought up to date only when it is reached, and the pivot
/// column below the pivot only when the pivot is found; both updates are
/// delayed-reduction dot products.
PluqFactors pluq_crout_lex(const DenseMatrix& a);

/// Splits into quadrants (leading tile ceil(m/2) x ceil(n/2)) and recurses;
/// blocks with max(m, n) <= threshold are handled by the Crout kernel.
/// Throws InvalidArgument when threshold is 0.
PluqFactors pluq_tile_recursive(const DenseMatrix& a, std::size_t threshold = 64);

/// Product-order search with rotations. Left-looking: row i is solved against
/// all previous pivots when it is reached. Right-looking: every pivot updates
/// the whole trailing matrix at once.
PluqFactors pluq_left_looking_product(const DenseMatrix& a);
PluqFactors pluq_right_looking_product(const DenseMatrix& a);

/// Dispatches on strategy.engine.
PluqFactors pluq(const DenseMatrix& a, const Strategy& strategy);

}  // namespace pluq
