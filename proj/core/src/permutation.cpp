#include "pluq/permutation.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "pluq/errors.hpp"

namespace pluq {

Permutation::Permutation(std::vector<std::size_t> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (std::size_t v : images_) {
    if (v >= images_.size() || seen[v])
      throw InvalidArgument("image list is not a permutation of 0.." +
                            std::to_string(images_.size()));
    seen[v] = true;
  }
}

Permutation Permutation::identity(std::size_t n) {
  Permutation p;
  p.images_.resize(n);
  std::iota(p.images_.begin(), p.images_.end(), std::size_t{0});
  return p;
}

Permutation Permutation::rotation(std::size_t k, std::size_t i, std::size_t n) {
  if (k > i || i >= n)
    throw InvalidArgument("rotation(" + std::to_string(k) + "," + std::to_string(i) +
                          ") out of range for size " + std::to_string(n));
  Permutation p = identity(n);
  p.rotate(k, i);
  return p;
}

Permutation Permutation::inverse() const {
  Permutation inv;
  inv.images_.resize(images_.size());
  for (std::size_t t = 0; t < images_.size(); ++t) inv.images_[images_[t]] = t;
  return inv;
}

bool Permutation::is_identity() const noexcept {
  for (std::size_t t = 0; t < images_.size(); ++t)
    if (images_[t] != t) return false;
  return true;
}

bool Permutation::is_k_monotone(std::size_t k) const {
  if (k > images_.size()) throw InvalidArgument("monotonicity offset exceeds permutation size");
  return std::is_sorted(images_.begin() + k, images_.end());
}

void Permutation::rotate(std::size_t k, std::size_t i) { rotate(k, i, i + 1); }

void Permutation::rotate(std::size_t first, std::size_t middle, std::size_t last) {
  if (first == middle || middle == last) return;
  std::rotate(images_.begin() + first, images_.begin() + middle, images_.begin() + last);
}

void Permutation::swap(std::size_t a, std::size_t b) { std::swap(images_[a], images_[b]); }

DenseMatrix Permutation::matrix(const PrimeField& field) const {
  DenseMatrix m(field, size(), size());
  for (std::size_t t = 0; t < size(); ++t) m(t, images_[t]) = field.one();
  return m;
}

std::string Permutation::to_string() const {
  std::ostringstream os;
  for (std::size_t t = 0; t < images_.size(); ++t) os << (t ? " " : "") << images_[t] + 1;
  return os.str();
}

Permutation compose(const Permutation& outer, const Permutation& inner) {
  if (outer.size() != inner.size()) throw DimensionError("compose: sizes differ");
  std::vector<std::size_t> img(inner.size());
  for (std::size_t t = 0; t < inner.size(); ++t) img[t] = outer[inner[t]];
  return Permutation(std::move(img));
}

DenseMatrix apply_perm(const Permutation& p, const DenseMatrix& a, Side side, bool transpose) {
  DenseMatrix out(a.field(), a.rows(), a.cols());
  if (side == Side::Rows) {
    if (p.size() != a.rows()) throw DimensionError("apply_perm: size does not match row count");
    for (std::size_t t = 0; t < p.size(); ++t) {
      const std::size_t dst = transpose ? p[t] : t;
      const std::size_t src = transpose ? t : p[t];
      std::copy(a.row(src).begin(), a.row(src).end(), out.row(dst).begin());
    }
  } else {
    if (p.size() != a.cols()) throw DimensionError("apply_perm: size does not match column count");
    for (std::size_t t = 0; t < p.size(); ++t) {
      const std::size_t dst = transpose ? t : p[t];
      const std::size_t src = transpose ? p[t] : t;
      for (std::size_t i = 0; i < a.rows(); ++i) out(i, dst) = a(i, src);
    }
  }
  return out;
}

}  // namespace pluq
