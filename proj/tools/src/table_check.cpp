#include "pluq/tools/table_check.hpp"

#include <algorithm>
#include <sstream>

#include "pluq/rank_oracle.hpp"
#include "pluq/tools/matrix_io.hpp"

namespace pluq::tools {
namespace {

RankProfile sorted_prefix(const Permutation& p, std::size_t r) {
  RankProfile out(p.images().begin(), p.images().begin() + static_cast<std::ptrdiff_t>(r));
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

std::vector<std::string> claim_violations(const DenseMatrix& a, const PluqFactors& f, const RevealClaims& claims) {
  std::vector<std::string> bad;
  if (f.reconstruct() != a) bad.emplace_back("reconstruction");
  if (claims.row_profile && sorted_prefix(f.P, f.rank) != oracle::row_rank_profile(a)) bad.emplace_back("row profile");
  if (claims.col_profile && sorted_prefix(f.Q, f.rank) != oracle::col_rank_profile(a)) bad.emplace_back("col profile");
  if (claims.rank_profile_matrix && f.pivoting_matrix() != oracle::rank_profile_matrix(a))
    bad.emplace_back("rank profile matrix");
  if (claims.row_monotone && !f.rows_monotone()) bad.emplace_back("row monotonicity");
  if (claims.col_monotone && !f.cols_monotone()) bad.emplace_back("col monotonicity");
  return bad;
}

DenseMatrix random_instance(const PrimeField& f, std::size_t max_m, std::size_t max_n, SplitMix64& rng) {
  // Mostly the upper half of the size range; a quarter may be tiny or empty.
  auto dim = [&](std::size_t max) {
    return rng.below(4) == 0 ? rng.below(max + 1) : max / 2 + rng.below(max - max / 2 + 1);
  };
  const std::size_t m = dim(max_m), n = dim(max_n);
  switch (rng.below(3)) {
    case 0: {
      const std::size_t r = rng.below(std::min(m, n) + 1);
      return random_rpm_matrix({m, n, r, f.characteristic(), rng()});
    }
    case 1:
      return random_sparse_matrix(f, m, n, 0.3 + 0.6 * static_cast<double>(rng.below(100)) / 100.0, rng);
    default: {
      const std::size_t k = std::min(m, n) ? 1 + rng.below(std::min(m, n)) : 0;
      const DenseMatrix x = random_sparse_matrix(f, m, k, 0.5, rng);
      const DenseMatrix y = random_sparse_matrix(f, k, n, 0.5, rng);
      return matmul(x, y);
    }
  }
}

std::vector<TableRowResult> verify_table(std::size_t trials, std::uint64_t seed, std::uint64_t p, std::size_t max_dim) {
  const PrimeField field(p);
  struct Case {
    std::string label;
    Strategy strategy;
    RevealClaims claims;
  };
  std::vector<Case> cases;
  for (const StrategyRow& row : strategy_table()) {
    const Strategy s = Strategy::iterative(row.search, row.row_perm, row.col_perm);
    cases.push_back({s.name(), s, row.claims});
  }
  for (const Strategy& s : {Strategy::crout_lex(), Strategy::tile_recursive(4), Strategy::left_looking_product(),
                            Strategy::right_looking_product()})
    cases.push_back({s.name(), s, *s.claims()});

  std::vector<TableRowResult> results;
  for (const Case& c : cases) results.push_back({c.label, 0, 0, {}});

  SplitMix64 rng(seed);
  for (std::size_t trial = 0; trial < trials; ++trial) {
    const DenseMatrix a = random_instance(field, max_dim, max_dim + 2, rng);
    for (std::size_t i = 0; i < cases.size(); ++i) {
      const auto bad = claim_violations(a, pluq(a, cases[i].strategy), cases[i].claims);
      ++results[i].trials;
      if (bad.empty()) continue;
      if (results[i].failures++ == 0) {
        std::ostringstream os;
        os << "trial " << trial << ": " << bad.front() << " on\n" << write_matrix(a);
        results[i].first_failure = os.str();
      }
    }
  }
  return results;
}

}  // namespace pluq::tools
