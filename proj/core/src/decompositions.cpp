#include "pluq/decompositions.hpp"

#include <algorithm>
#include <numeric>

#include "pluq/errors.hpp"
#include "pluq/rank_oracle.hpp"

namespace pluq {
namespace {

void require_revealing(const PluqFactors& f, const char* what) {
  if (!f.strategy.reveals_rank_profile_matrix())
    throw NotRevealingError(std::string(what) + ": strategy " + f.strategy.name() +
                            " does not reveal the rank profile matrix");
}

// Factorization positions t (< r) whose pivot lies in the leading
// rows x cols block, ordered by the pivot's original row.
std::vector<std::size_t> pivots_by_row(const PluqFactors& f, std::size_t rows, std::size_t cols) {
  std::vector<std::size_t> ts;
  for (std::size_t t = 0; t < f.rank; ++t)
    if (f.P[t] < rows && f.Q[t] < cols) ts.push_back(t);
  std::sort(ts.begin(), ts.end(), [&](std::size_t a, std::size_t b) { return f.P[a] < f.P[b]; });
  return ts;
}

}  // namespace

EchelonForm leading_echelon(const PluqFactors& f, std::size_t rows, std::size_t cols) {
  require_revealing(f, "echelon form");
  if (rows < 1 || rows > f.rows() || cols < 1 || cols > f.cols())
    throw DimensionError("leading echelon bounds " + std::to_string(rows) + "x" +
                         std::to_string(cols) + " outside " + std::to_string(f.rows()) + "x" +
                         std::to_string(f.cols()));
  // Column c of the result is column tau(c) of P*L, truncated to `rows`.
  const std::vector<std::size_t> tau = pivots_by_row(f, rows, cols);
  DenseMatrix c(f.L.field(), rows, cols);
  std::vector<Pivot> leads;
  for (std::size_t col = 0; col < tau.size(); ++col) {
    for (std::size_t t = 0; t < f.rows(); ++t)
      if (f.P[t] < rows) c(f.P[t], col) = f.L(t, tau[col]);
    leads.push_back({f.P[tau[col]], col});
  }
  return {std::move(c), std::move(leads), EchelonKind::Column};
}

EchelonForm column_echelon(const PluqFactors& f) {
  require_revealing(f, "echelon form");
  if (f.rows() == 0 || f.cols() == 0)
    return {DenseMatrix(f.L.field(), f.rows(), f.cols()), {}, EchelonKind::Column};
  return leading_echelon(f, f.rows(), f.cols());
}

EchelonForm row_echelon(const PluqFactors& f) {
  require_revealing(f, "echelon form");
  std::vector<std::size_t> tau(f.rank);
  std::iota(tau.begin(), tau.end(), std::size_t{0});
  std::sort(tau.begin(), tau.end(), [&](std::size_t a, std::size_t b) { return f.Q[a] < f.Q[b]; });
  DenseMatrix r(f.U.field(), f.rows(), f.cols());
  std::vector<Pivot> leads;
  for (std::size_t row = 0; row < tau.size(); ++row) {
    for (std::size_t u = 0; u < f.cols(); ++u) r(row, f.Q[u]) = f.U(tau[row], u);
    leads.push_back({row, f.Q[tau[row]]});
  }
  return {std::move(r), std::move(leads), EchelonKind::Row};
}

LeuFactors leu(const PluqFactors& f) {
  require_revealing(f, "LEU");
  const PrimeField& field = f.L.field();
  const std::size_t m = f.rows(), n = f.cols();
  DenseMatrix lbar(field, m, m), ubar(field, n, n);
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < f.rank; ++b) lbar(f.P[a], f.P[b]) = f.L(a, b);
  for (std::size_t a = 0; a < f.rank; ++a)
    for (std::size_t b = 0; b < n; ++b) ubar(f.Q[a], f.Q[b]) = f.U(a, b);
  return {std::move(lbar), f.pivoting_matrix(), std::move(ubar)};
}

DenseMatrix anti_identity(const PrimeField& field, std::size_t n) {
  DenseMatrix j(field, n, n);
  for (std::size_t i = 0; i < n; ++i) j(i, n - 1 - i) = field.one();
  return j;
}

BruhatFactors bruhat(const DenseMatrix& a) {
  const std::size_t m = a.rows();
  DenseMatrix ja(a.field(), m, a.cols());
  for (std::size_t i = 0; i < m; ++i) std::copy(a.row(i).begin(), a.row(i).end(), ja.row(m - 1 - i).begin());
  LeuFactors e = leu(pluq_crout_lex(ja));

  DenseMatrix v(a.field(), m, m);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) v(m - 1 - i, m - 1 - j) = e.Lbar(i, j);
  std::vector<Pivot> flipped;
  for (const Pivot& p : e.E.pivots()) flipped.push_back({m - 1 - p.row, p.col});
  return {std::move(v), SubPermutationMatrix(m, a.cols(), std::move(flipped)), std::move(e.Ubar)};
}

GenericProfileReport generic_profile_check(const DenseMatrix& a) {
  GenericProfileReport out;
  const RankProfile rows = oracle::row_rank_profile(a);
  const RankProfile cols = oracle::col_rank_profile(a);
  const std::size_t r = rows.size();
  auto is_prefix = [](const RankProfile& p) {
    for (std::size_t t = 0; t < p.size(); ++t)
      if (p[t] != t) return false;
    return true;
  };
  out.generic_row = is_prefix(rows);
  out.generic_col = is_prefix(cols);
  out.generic_rank_profile = true;
  for (std::size_t k = 1; k <= r && out.generic_rank_profile; ++k)
    out.generic_rank_profile = oracle::rank(a.leading(k, k)) == k;

  if (out.generic_col) {
    const PluqFactors f =
        pluq_iterative(a, SearchOrder::RevLex, PermStrategy::Rotation, PermStrategy::Transposition);
    bool holds = f.Q.is_identity();
    std::vector<Pivot> p_ir;
    for (std::size_t t = 0; t < f.rank; ++t) p_ir.push_back({f.P[t], t});
    holds = holds && SubPermutationMatrix(a.rows(), a.cols(), std::move(p_ir)) ==
                         oracle::rank_profile_matrix(a);
    out.plu_reveals_rank_profile_matrix = holds;
  }
  return out;
}

namespace {

std::optional<std::size_t> topmost_nonzero(const DenseMatrix& c, std::size_t col) {
  for (std::size_t i = 0; i < c.rows(); ++i)
    if (!c(i, col).is_zero()) return i;
  return std::nullopt;
}

}  // namespace

bool is_column_echelon(const DenseMatrix& c) {
  bool seen_zero = false;
  std::optional<std::size_t> prev;
  for (std::size_t j = 0; j < c.cols(); ++j) {
    const auto lead = topmost_nonzero(c, j);
    if (!lead) {
      seen_zero = true;
      continue;
    }
    if (seen_zero || (prev && *lead <= *prev)) return false;
    prev = lead;
  }
  return true;
}

bool is_row_echelon(const DenseMatrix& r) { return is_column_echelon(r.transpose()); }

}  // namespace pluq
