#pragma once

#include <cstddef>
#include <cstdint>

#include "pluq/matrix.hpp"
#include "pluq/sub_permutation.hpp"

namespace pluq {

/// SplitMix64. Fixed algorithm so seeded output is reproducible everywhere.
class SplitMix64 {
 public:
  using result_type = std::uint64_t;
  explicit SplitMix64(std::uint64_t seed) noexcept : state_(seed) {}

  static constexpr result_type min() noexcept { return 0; }
  static constexpr result_type max() noexcept { return ~result_type{0}; }
  result_type operator()() noexcept;

  /// Uniform in [0, bound) by rejection. bound must be positive.
  std::uint64_t below(std::uint64_t bound) noexcept;
  FieldElement element(const PrimeField& f) noexcept { return {static_cast<std::uint32_t>(below(f.characteristic()))}; }
  FieldElement nonzero_element(const PrimeField& f) noexcept {
    return {static_cast<std::uint32_t>(1 + below(f.characteristic() - 1))};
  }

 private:
  std::uint64_t state_;
};

struct GenSpec {
  std::size_t m = 0;
  std::size_t n = 0;
  std::size_t r = 0;
  std::uint64_t p = kDefaultPrime;
  std::uint64_t seed = 0;
};

/// r pivots at uniformly chosen distinct rows and columns.
/// Throws InvalidArgument if r > min(m, n).
SubPermutationMatrix random_rsubperm(std::size_t m, std::size_t n, std::size_t r, std::uint64_t seed);

/// L * expand(R) * U with L unit lower triangular and U upper triangular
/// with non-zero diagonal, both random. Each leading i x j block of the
/// result is L_ii * R_ij * U_jj with invertible outer factors, so the rank
/// profile matrix of the result is exactly R.
DenseMatrix random_rpm_matrix(const GenSpec& spec);

/// Entries are zero with probability about `zero_fraction`, otherwise
/// uniform non-zero.
DenseMatrix random_sparse_matrix(const PrimeField& f, std::size_t m, std::size_t n, double zero_fraction,
                                 SplitMix64& rng);

}  // namespace pluq
