#include "pluq/rank_oracle.hpp"

#include <vector>

namespace pluq::oracle {
namespace {

using Row = std::vector<FieldElement>;

// Reduced basis of a growing row space. Each stored row has a leading
// coefficient 1 at `lead`, and every other stored row is zero there.
class RowSpace {
 public:
  explicit RowSpace(const PrimeField& f) : f_(f) {}

  // Returns true (and absorbs v) iff v is outside the current span.
  bool insert(Row v) {
    for (std::size_t b = 0; b < basis_.size(); ++b) {
      const FieldElement c = v[lead_[b]];
      if (c.is_zero()) continue;
      for (std::size_t j = 0; j < v.size(); ++j)
        v[j] = f_.sub(v[j], f_.mul(c, basis_[b][j]));
    }
    std::size_t lead = 0;
    while (lead < v.size() && v[lead].is_zero()) ++lead;
    if (lead == v.size()) return false;
    const FieldElement s = f_.inv(v[lead]);
    for (FieldElement& x : v) x = f_.mul(x, s);
    for (Row& b : basis_) {
      const FieldElement c = b[lead];
      if (c.is_zero()) continue;
      for (std::size_t j = 0; j < b.size(); ++j) b[j] = f_.sub(b[j], f_.mul(c, v[j]));
    }
    basis_.push_back(std::move(v));
    lead_.push_back(lead);
    return true;
  }

 private:
  const PrimeField& f_;
  std::vector<Row> basis_;
  std::vector<std::size_t> lead_;
};

Row copy_row(const DenseMatrix& a, std::size_t i) {
  auto r = a.row(i);
  return Row(r.begin(), r.end());
}

}  // namespace

std::size_t rank(const DenseMatrix& a) {
  const PrimeField& f = a.field();
  std::vector<Row> m;
  for (std::size_t i = 0; i < a.rows(); ++i) m.push_back(copy_row(a, i));
  std::size_t r = 0;
  for (std::size_t j = 0; j < a.cols() && r < m.size(); ++j) {
    std::size_t piv = r;
    while (piv < m.size() && m[piv][j].is_zero()) ++piv;
    if (piv == m.size()) continue;
    std::swap(m[piv], m[r]);
    const FieldElement s = f.inv(m[r][j]);
    for (std::size_t i = r + 1; i < m.size(); ++i) {
      const FieldElement c = f.mul(m[i][j], s);
      if (c.is_zero()) continue;
      for (std::size_t t = j; t < a.cols(); ++t) m[i][t] = f.sub(m[i][t], f.mul(c, m[r][t]));
    }
    ++r;
  }
  return r;
}

RankProfile row_rank_profile(const DenseMatrix& a) {
  RowSpace space(a.field());
  RankProfile out;
  for (std::size_t i = 0; i < a.rows(); ++i)
    if (space.insert(copy_row(a, i))) out.push_back(i);
  return out;
}

RankProfile col_rank_profile(const DenseMatrix& a) { return row_rank_profile(a.transpose()); }

SubPermutationMatrix rank_profile_matrix(const DenseMatrix& a) {
  const std::size_t m = a.rows(), n = a.cols();
  std::vector<Pivot> pivots;
  RowSpace leading_rows(a.field());
  for (std::size_t i = 0; i < m; ++i) {
    if (!leading_rows.insert(copy_row(a, i))) continue;
    // rank(A[0..i, 0..k)) - rank(A[0..i-1, 0..k)) is 0 then 1 as k grows;
    // binary search for the first k (as a column count) where it is 1.
    std::size_t lo = 1, hi = n;
    while (lo < hi) {
      const std::size_t mid = lo + (hi - lo) / 2;
      const bool grows = rank(a.leading(i + 1, mid)) == rank(a.leading(i, mid)) + 1;
      if (grows)
        hi = mid;
      else
        lo = mid + 1;
    }
    pivots.push_back({i, lo - 1});
  }
  return SubPermutationMatrix(m, n, std::move(pivots));
}

}  // namespace pluq::oracle
