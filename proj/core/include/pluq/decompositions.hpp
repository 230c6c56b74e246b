#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "pluq/elimination.hpp"
#include "pluq/matrix.hpp"
#include "pluq/sub_permutation.hpp"

namespace pluq {

enum class EchelonKind { Column, Row };

/// Column kind: C = A*T for a non-singular T, the topmost non-zero of each
/// non-zero column strictly lower than that of the column before, zero
/// columns last. Row kind is the transpose notion. Leading entries are not
/// normalized.
struct EchelonForm {
  DenseMatrix C;
  std::vector<Pivot> pivot_positions;  // leading entries, in staircase order
  EchelonKind kind;
};

/// A = Lbar * E * Ubar with Lbar (m x m) lower and Ubar (n x n) upper
/// triangular and E the rank profile matrix.
struct LeuFactors {
  DenseMatrix Lbar;
  SubPermutationMatrix E;
  DenseMatrix Ubar;
};

/// A = V * P * U with V (m x m) and U (n x n) upper triangular.
struct BruhatFactors {
  DenseMatrix V;
  SubPermutationMatrix P;
  DenseMatrix U;
};

// The following require factors whose pivoting matrix is the rank profile
// matrix (per factors.strategy); otherwise they throw NotRevealingError.

/// Column echelon form of A from P*L, columns sorted by pivot row.
EchelonForm column_echelon(const PluqFactors& factors);
/// Column echelon form of the leading rows x cols sub-matrix of A, read off
/// the same factors. Throws DimensionError unless 1 <= rows <= m and
/// 1 <= cols <= n.
EchelonForm leading_echelon(const PluqFactors& factors, std::size_t rows, std::size_t cols);
/// Row echelon form of A from U*Q, rows sorted by pivot column.
EchelonForm row_echelon(const PluqFactors& factors);
/// Lbar = P [L 0] P^T, E = P [I_r 0; 0 0] Q, Ubar = Q^T [U; 0] Q.
LeuFactors leu(const PluqFactors& factors);

/// Factors J*A with the Crout engine (J the m x m unit anti-diagonal) and
/// maps its LEU back: V = J Lbar J, P = J E, U = Ubar.
BruhatFactors bruhat(const DenseMatrix& a);

struct GenericProfileReport {
  bool generic_row = false;           // RowRP = (1..r)
  bool generic_col = false;           // ColRP = (1..r)
  bool generic_rank_profile = false;  // first r leading principal minors non-zero
  /// Set when generic_col holds: whether a reverse-lexicographic search with
  /// row rotations gave a PLU (Q = I) whose P [I_r; 0] is the rank profile
  /// matrix.
  std::optional<bool> plu_reveals_rank_profile_matrix;
};

GenericProfileReport generic_profile_check(const DenseMatrix& a);

bool is_column_echelon(const DenseMatrix& c);
bool is_row_echelon(const DenseMatrix& r);

/// Unit anti-diagonal n x n matrix.
DenseMatrix anti_identity(const PrimeField& field, std::size_t n);

}  // namespace pluq
