#include "pluq/prime_field.hpp"

#include <limits>
#include <string>

#include "pluq/errors.hpp"

namespace pluq {

bool is_prime(std::uint64_t n) noexcept {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d * d <= n; d += 2)
    if (n % d == 0) return false;
  return true;
}

PrimeField::PrimeField(std::uint64_t p) : p_(0) {
  if (p <= 2 || p > kMaxPrime || !is_prime(p))
    throw InvalidArgument("modulus " + std::to_string(p) + " is not an odd prime below 2^31");
  p_ = static_cast<std::uint32_t>(p);
}

FieldElement PrimeField::element(std::int64_t v) const noexcept {
  std::int64_t r = v % static_cast<std::int64_t>(p_);
  if (r < 0) r += p_;
  return {static_cast<std::uint32_t>(r)};
}

FieldElement PrimeField::canonical(std::uint64_t v) const {
  if (v >= p_)
    throw InvalidArgument("value " + std::to_string(v) + " is not below " + std::to_string(p_));
  return {static_cast<std::uint32_t>(v)};
}

FieldElement PrimeField::inv(FieldElement a, ReductionCounter* rc) const {
  if (a.is_zero()) throw DivisionByZero();
  std::int64_t t = 0, new_t = 1;
  std::int64_t r = p_, new_r = a.value;
  while (new_r != 0) {
    const std::int64_t q = r / new_r;
    t -= q * new_t;
    std::swap(t, new_t);
    r -= q * new_r;
    std::swap(r, new_r);
  }
  if (rc) rc->add();
  return element(t);
}

FieldElement PrimeField::dot_accumulate(StridedRange u, StridedRange v, ReductionCounter* rc) const {
  if (u.size != v.size)
    throw DimensionError("dot product of lengths " + std::to_string(u.size) + " and " +
                         std::to_string(v.size));
  if (u.size == 0) return zero();

  constexpr std::uint64_t kMax = std::numeric_limits<std::uint64_t>::max();
  std::uint64_t acc = 0;
  std::uint64_t reductions = 1;  // the final one
  for (std::size_t i = 0; i < u.size; ++i) {
    const std::uint64_t prod = std::uint64_t{u[i].value} * v[i].value;
    if (acc > kMax - prod) {
      acc %= p_;
      ++reductions;
    }
    acc += prod;
  }
  if (rc) rc->add(reductions);
  return {static_cast<std::uint32_t>(acc % p_)};
}

}  // namespace pluq
