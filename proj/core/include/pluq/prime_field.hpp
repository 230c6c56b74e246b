#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>

namespace pluq {

/// Canonical representative of a residue class, always in [0, p).
struct FieldElement {
  std::uint32_t value = 0;

  constexpr bool is_zero() const noexcept { return value == 0; }
  friend constexpr auto operator<=>(FieldElement, FieldElement) = default;
};

/// Number of modular reductions performed by one elimination run.
class ReductionCounter {
 public:
  void add(std::uint64_t n = 1) noexcept { count_ += n; }
  void reset() noexcept { count_ = 0; }
  std::uint64_t count() const noexcept { return count_; }

 private:
  std::uint64_t count_ = 0;
};

/// Read-only view of `size` elements spaced `stride` apart (a matrix column,
/// or a row when stride is 1).
struct StridedRange {
  const FieldElement* first = nullptr;
  std::size_t size = 0;
  std::size_t stride = 1;

  StridedRange() = default;
  StridedRange(const FieldElement* f, std::size_t n, std::size_t s)
      : first(f), size(n), stride(s) {}
  StridedRange(std::span<const FieldElement> s)  // NOLINT: implicit by intent
      : first(s.data()), size(s.size()), stride(1) {}

  const FieldElement& operator[](std::size_t i) const { return first[i * stride]; }
};

/// GF(p) for an odd prime 2 < p < 2^31.
///
/// Every operation accepts an optional ReductionCounter. A reduction is one
/// application of the modulus to a wide value: the `%` in a product, or the
/// conditional correction after an addition or subtraction. Each call counts
/// at most one, and only when the reduction actually happens.
class PrimeField {
 public:
  static constexpr std::uint64_t kMaxPrime = (std::uint64_t{1} << 31) - 1;

  /// Throws InvalidArgument unless p is an odd prime below 2^31.
  explicit PrimeField(std::uint64_t p);

  std::uint32_t characteristic() const noexcept { return p_; }

  /// Reduces an arbitrary signed integer into the field.
  FieldElement element(std::int64_t v) const noexcept;
  /// Wraps a value already known to be canonical; throws if v >= p.
  FieldElement canonical(std::uint64_t v) const;

  FieldElement zero() const noexcept { return {}; }
  FieldElement one() const noexcept { return {1}; }

  FieldElement add(FieldElement a, FieldElement b, ReductionCounter* rc = nullptr) const noexcept {
    std::uint32_t s = a.value + b.value;  // < 2^32
    if (s >= p_) {
      s -= p_;
      if (rc) rc->add();
    }
    return {s};
  }

  FieldElement sub(FieldElement a, FieldElement b, ReductionCounter* rc = nullptr) const noexcept {
    if (a.value >= b.value) return {a.value - b.value};
    if (rc) rc->add();
    return {a.value + p_ - b.value};
  }

  FieldElement neg(FieldElement a, ReductionCounter* rc = nullptr) const noexcept {
    if (a.value == 0) return a;
    if (rc) rc->add();
    return {p_ - a.value};
  }

  FieldElement mul(FieldElement a, FieldElement b, ReductionCounter* rc = nullptr) const noexcept {
    if (rc) rc->add();
    return {static_cast<std::uint32_t>(std::uint64_t{a.value} * b.value % p_)};
  }

  /// Throws DivisionByZero on a == 0.
  FieldElement inv(FieldElement a, ReductionCounter* rc = nullptr) const;

  FieldElement div(FieldElement a, FieldElement b, ReductionCounter* rc = nullptr) const {
    return mul(a, inv(b, rc), rc);
  }

  /// Sum of u[i]*v[i] in a 64-bit accumulator. The accumulator is reduced
  /// only when the next product would overflow it, and once at the end.
  /// Throws DimensionError on a length mismatch.
  FieldElement dot_accumulate(StridedRange u, StridedRange v, ReductionCounter* rc = nullptr) const;

  friend bool operator==(const PrimeField&, const PrimeField&) = default;

 private:
  std::uint32_t p_;
};

bool is_prime(std::uint64_t n) noexcept;

/// Field used by the CLI when no prime is given.
inline constexpr std::uint32_t kDefaultPrime = 131063;

}  // namespace pluq
