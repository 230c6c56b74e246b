#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "pluq/matrix.hpp"

namespace pluq {

/// A bijection sigma on {0..n-1}, stored as its image array.
///
/// The associated matrix P has P[t, sigma(t)] = 1, so row t of P*A is row
/// sigma(t) of A. In a PLUQ decomposition the image arrays of P and Q read
/// "position t of the factorization holds original row (column) sigma(t)",
/// so the left factor of A = P L U Q is matrix()^T and the right one matrix().
class Permutation {
 public:
  Permutation() = default;
  /// Throws InvalidArgument unless `images` is a bijection on {0..n-1}.
  explicit Permutation(std::vector<std::size_t> images);

  static Permutation identity(std::size_t n);
  /// The (k,i)-rotation: position k receives i, positions k+1..i receive
  /// k..i-1, everything else is fixed. Throws InvalidArgument unless
  /// k <= i < n.
  static Permutation rotation(std::size_t k, std::size_t i, std::size_t n);

  std::size_t size() const noexcept { return images_.size(); }
  std::size_t operator[](std::size_t t) const { return images_[t]; }
  const std::vector<std::size_t>& images() const noexcept { return images_; }

  Permutation inverse() const;
  bool is_identity() const noexcept;

  /// True iff sigma(k) < sigma(k+1) < ... < sigma(n-1), i.e. the values after
  /// the first k positions increase. Requires k <= n.
  bool is_k_monotone(std::size_t k) const;

  /// Right-composes with the (k,i)-rotation: the entry at position i moves to
  /// position k and k..i-1 shift up by one.
  void rotate(std::size_t k, std::size_t i);
  /// std::rotate over positions [first, last).
  void rotate(std::size_t first, std::size_t middle, std::size_t last);
  void swap(std::size_t a, std::size_t b);

  DenseMatrix matrix(const PrimeField& field) const;

  /// 1-based image list, space separated.
  std::string to_string() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;

 private:
  std::vector<std::size_t> images_;
};

/// (outer o inner)(t) = outer(inner(t)). Sizes must agree.
Permutation compose(const Permutation& outer, const Permutation& inner);

enum class Side { Rows, Cols };

/// Rows: P*A (or P^T*A). Cols: A*P (or A*P^T). Throws DimensionError when
/// the permutation size does not match the permuted dimension.
DenseMatrix apply_perm(const Permutation& p, const DenseMatrix& a, Side side, bool transpose = false);

}  // namespace pluq
