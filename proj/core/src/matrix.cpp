#include "pluq/matrix.hpp"

#include <algorithm>
#include <string>

#include "pluq/errors.hpp"

namespace pluq {

DenseMatrix::DenseMatrix(PrimeField field, std::size_t rows, std::size_t cols)
    : field_(field), rows_(rows), cols_(cols), data_(rows * cols) {}

DenseMatrix DenseMatrix::from_rows(PrimeField field,
                                   std::initializer_list<std::initializer_list<std::int64_t>> rows) {
  const std::size_t m = rows.size();
  const std::size_t n = m == 0 ? 0 : rows.begin()->size();
  DenseMatrix a(field, m, n);
  std::size_t i = 0;
  for (const auto& r : rows) {
    if (r.size() != n) throw DimensionError("ragged row " + std::to_string(i));
    std::size_t j = 0;
    for (std::int64_t v : r) a(i, j++) = field.element(v);
    ++i;
  }
  return a;
}

DenseMatrix DenseMatrix::identity(PrimeField field, std::size_t n) {
  DenseMatrix a(field, n, n);
  for (std::size_t i = 0; i < n; ++i) a(i, i) = field.one();
  return a;
}

DenseMatrix DenseMatrix::block(std::size_t r0, std::size_t c0, std::size_t m, std::size_t n) const {
  if (r0 + m > rows_ || c0 + n > cols_)
    throw DimensionError("block exceeds " + std::to_string(rows_) + "x" + std::to_string(cols_));
  DenseMatrix b(field_, m, n);
  for (std::size_t i = 0; i < m; ++i)
    std::copy_n(data_.begin() + (r0 + i) * cols_ + c0, n, b.data_.begin() + i * n);
  return b;
}

DenseMatrix DenseMatrix::transpose() const {
  DenseMatrix t(field_, cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

bool DenseMatrix::is_zero() const noexcept {
  return std::all_of(data_.begin(), data_.end(), [](FieldElement e) { return e.is_zero(); });
}

bool DenseMatrix::is_upper_triangular() const noexcept {
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < std::min(i, cols_); ++j)
      if (!(*this)(i, j).is_zero()) return false;
  return true;
}

bool DenseMatrix::is_lower_triangular() const noexcept {
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = i + 1; j < cols_; ++j)
      if (!(*this)(i, j).is_zero()) return false;
  return true;
}

void DenseMatrix::rotate_rows(std::size_t k, std::size_t i) { rotate_rows(k, i, i + 1); }

void DenseMatrix::rotate_cols(std::size_t k, std::size_t j) { rotate_cols(k, j, j + 1); }

void DenseMatrix::rotate_rows(std::size_t first, std::size_t middle, std::size_t last) {
  if (first == middle || middle == last) return;
  std::rotate(data_.begin() + first * cols_, data_.begin() + middle * cols_,
              data_.begin() + last * cols_);
}

void DenseMatrix::rotate_cols(std::size_t first, std::size_t middle, std::size_t last) {
  if (first == middle || middle == last) return;
  for (std::size_t i = 0; i < rows_; ++i) {
    const auto r = data_.begin() + i * cols_;
    std::rotate(r + first, r + middle, r + last);
  }
}

void DenseMatrix::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) return;
  std::swap_ranges(data_.begin() + a * cols_, data_.begin() + (a + 1) * cols_,
                   data_.begin() + b * cols_);
}

void DenseMatrix::swap_cols(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t i = 0; i < rows_; ++i) std::swap((*this)(i, a), (*this)(i, b));
}

DenseMatrix matmul(const DenseMatrix& a, const DenseMatrix& b, ReductionCounter* rc) {
  if (a.cols() != b.rows())
    throw DimensionError("matmul: " + std::to_string(a.rows()) + "x" + std::to_string(a.cols()) +
                         " times " + std::to_string(b.rows()) + "x" + std::to_string(b.cols()));
  if (!(a.field() == b.field())) throw DimensionError("matmul: operands over different fields");
  const PrimeField& f = a.field();
  DenseMatrix c(f, a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j)
      c(i, j) = f.dot_accumulate(a.row(i), b.column(j, 0, b.rows()), rc);
  return c;
}

DenseMatrix hconcat(const DenseMatrix& a, const DenseMatrix& b) {
  if (a.rows() != b.rows()) throw DimensionError("hconcat: row counts differ");
  DenseMatrix c(a.field(), a.rows(), a.cols() + b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    std::copy(a.row(i).begin(), a.row(i).end(), c.row(i).begin());
    std::copy(b.row(i).begin(), b.row(i).end(), c.row(i).begin() + a.cols());
  }
  return c;
}

}  // namespace pluq
