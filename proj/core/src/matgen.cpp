#include "pluq/matgen.hpp"

#include <algorithm>
#include <numeric>
#include <string>
#include <vector>

#include "pluq/errors.hpp"

namespace pluq {

SplitMix64::result_type SplitMix64::operator()() noexcept {
  std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

std::uint64_t SplitMix64::below(std::uint64_t bound) noexcept {
  // Reject the top partial bucket to stay unbiased.
  const std::uint64_t limit = max() - max() % bound;
  std::uint64_t x;
  do x = (*this)();
  while (x >= limit);
  return x % bound;
}

namespace {

// First k entries of a seeded partial Fisher-Yates shuffle of 0..n-1.
std::vector<std::size_t> sample(std::size_t n, std::size_t k, SplitMix64& rng) {
  std::vector<std::size_t> v(n);
  std::iota(v.begin(), v.end(), std::size_t{0});
  for (std::size_t i = 0; i < k; ++i) std::swap(v[i], v[i + rng.below(n - i)]);
  v.resize(k);
  return v;
}

}  // namespace

SubPermutationMatrix random_rsubperm(std::size_t m, std::size_t n, std::size_t r, std::uint64_t seed) {
  if (r > std::min(m, n))
    throw InvalidArgument("rank " + std::to_string(r) + " exceeds min(" + std::to_string(m) + ", " +
                          std::to_string(n) + ")");
  SplitMix64 rng(seed);
  const auto rows = sample(m, r, rng);
  const auto cols = sample(n, r, rng);
  std::vector<Pivot> pivots;
  for (std::size_t t = 0; t < r; ++t) pivots.push_back({rows[t], cols[t]});
  return SubPermutationMatrix(m, n, std::move(pivots));
}

DenseMatrix random_rpm_matrix(const GenSpec& spec) {
  const PrimeField f(spec.p);
  const SubPermutationMatrix r = random_rsubperm(spec.m, spec.n, spec.r, spec.seed);
  // Independent stream for the triangular factors.
  SplitMix64 rng(spec.seed ^ 0x5851f42d4c957f2dULL);

  // L R is R's pivot columns scattered: column j of L R is column i of L when
  // (i, j) is a pivot. Then (L R) U mixes those columns rightwards.
  DenseMatrix lr(f, spec.m, spec.n);
  for (const Pivot& pv : r.pivots()) {
    lr(pv.row, pv.col) = f.one();
    for (std::size_t i = pv.row + 1; i < spec.m; ++i) lr(i, pv.col) = rng.element(f);
  }
  DenseMatrix u(f, spec.n, spec.n);
  for (std::size_t i = 0; i < spec.n; ++i) {
    u(i, i) = rng.nonzero_element(f);
    for (std::size_t j = i + 1; j < spec.n; ++j) u(i, j) = rng.element(f);
  }
  return matmul(lr, u);
}

DenseMatrix random_sparse_matrix(const PrimeField& f, std::size_t m, std::size_t n, double zero_fraction,
                                 SplitMix64& rng) {
  DenseMatrix a(f, m, n);
  const auto threshold = static_cast<std::uint64_t>(std::clamp(zero_fraction, 0.0, 1.0) * 1'000'000.0);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (rng.below(1'000'000) >= threshold) a(i, j) = rng.nonzero_element(f);
  return a;
}

}  // namespace pluq
