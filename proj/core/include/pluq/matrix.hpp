#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

#include "pluq/prime_field.hpp"

namespace pluq {

/// Row-major m x n matrix over GF(p). Element access is 0-based.
class DenseMatrix {
 public:
  DenseMatrix(PrimeField field, std::size_t rows, std::size_t cols);

  /// Builds a matrix from integer rows, reducing each entry mod p.
  /// Throws DimensionError on ragged input.
  static DenseMatrix from_rows(PrimeField field,
                               std::initializer_list<std::initializer_list<std::int64_t>> rows);
  static DenseMatrix identity(PrimeField field, std::size_t n);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  const PrimeField& field() const noexcept { return field_; }

  FieldElement& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  FieldElement operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  std::span<FieldElement> row(std::size_t i) { return {data_.data() + i * cols_, cols_}; }
  std::span<const FieldElement> row(std::size_t i) const { return {data_.data() + i * cols_, cols_}; }

  /// Entries (first_row .. first_row+len-1, j) as a strided view.
  StridedRange column(std::size_t j, std::size_t first_row, std::size_t len) const {
    return {data_.data() + first_row * cols_ + j, len, cols_};
  }
  /// Entries (i, first_col .. first_col+len-1).
  std::span<const FieldElement> row_segment(std::size_t i, std::size_t first_col,
                                            std::size_t len) const {
    return {data_.data() + i * cols_ + first_col, len};
  }

  std::span<FieldElement> data() noexcept { return data_; }
  std::span<const FieldElement> data() const noexcept { return data_; }

  /// Copy of the m x n block whose top-left corner is (r0, c0).
  DenseMatrix block(std::size_t r0, std::size_t c0, std::size_t m, std::size_t n) const;
  /// Copy of the leading i x j sub-matrix.
  DenseMatrix leading(std::size_t i, std::size_t j) const { return block(0, 0, i, j); }
  DenseMatrix transpose() const;

  bool is_zero() const noexcept;
  bool is_upper_triangular() const noexcept;
  bool is_lower_triangular() const noexcept;

  /// Moves row i to position k (k <= i), shifting rows k..i-1 down by one.
  void rotate_rows(std::size_t k, std::size_t i);
  /// Moves column j to position k (k <= j), shifting columns k..j-1 right.
  void rotate_cols(std::size_t k, std::size_t j);
  /// std::rotate over rows [first, last): row `middle` becomes row `first`.
  void rotate_rows(std::size_t first, std::size_t middle, std::size_t last);
  void rotate_cols(std::size_t first, std::size_t middle, std::size_t last);
  void swap_rows(std::size_t a, std::size_t b);
  void swap_cols(std::size_t a, std::size_t b);

  friend bool operator==(const DenseMatrix&, const DenseMatrix&) = default;

 private:
  PrimeField field_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<FieldElement> data_;
};

/// Classical product; rows times columns with delayed-reduction dots.
DenseMatrix matmul(const DenseMatrix& a, const DenseMatrix& b, ReductionCounter* rc = nullptr);

/// [A | B], same row count.
DenseMatrix hconcat(const DenseMatrix& a, const DenseMatrix& b);

}  // namespace pluq
