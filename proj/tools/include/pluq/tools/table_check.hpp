#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "pluq/elimination.hpp"
#include "pluq/matgen.hpp"

namespace pluq::tools {

/// Claims of `claims` that the factorization of `a` violates, plus
/// "reconstruction" when P L U Q != A. Profiles are taken from the oracle.
std::vector<std::string> claim_violations(const DenseMatrix& a, const PluqFactors& f, const RevealClaims& claims);

/// Random test matrix with m <= max_m, n <= max_n. Alternates planted rank
/// profile products, sparse matrices and low-rank products of sparse factors.
DenseMatrix random_instance(const PrimeField& f, std::size_t max_m, std::size_t max_n, SplitMix64& rng);

struct TableRowResult {
  std::string label;
  std::size_t trials = 0;
  std::size_t failures = 0;
  std::string first_failure;  // description of the first violation, if any
};

/// Runs every classified strategy row through the iterative engine, and the
/// dedicated engines against their claims, on `trials` random instances of
/// at most max_dim x (max_dim + 2).
std::vector<TableRowResult> verify_table(std::size_t trials, std::uint64_t seed, std::uint64_t p, std::size_t max_dim);

}  // namespace pluq::tools
