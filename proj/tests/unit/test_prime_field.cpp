#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "pluq/errors.hpp"
#include "pluq/prime_field.hpp"

namespace pluq {
namespace {

using testing::naive_dot;

FieldElement el(std::uint32_t v) { return {v}; }
StridedRange view(const std::vector<FieldElement>& v) { return {v.data(), v.size(), 1}; }

TEST(PrimeField, RejectsNonPrimesAndOutOfRange) {
  EXPECT_THROW(PrimeField(2), InvalidArgument);
  EXPECT_THROW(PrimeField(9), InvalidArgument);
  EXPECT_THROW(PrimeField(1), InvalidArgument);
  EXPECT_THROW(PrimeField(PrimeField::kMaxPrime + 2), InvalidArgument);
  EXPECT_NO_THROW(PrimeField{3});
  EXPECT_NO_THROW(PrimeField(PrimeField::kMaxPrime));  // 2^31 - 1 is prime
  EXPECT_NO_THROW(PrimeField{kDefaultPrime});
}

TEST(PrimeField, CanonicalAndElement) {
  const PrimeField f(7);
  EXPECT_EQ(f.element(-1).value, 6u);
  EXPECT_EQ(f.element(15).value, 1u);
  EXPECT_THROW(f.canonical(7), InvalidArgument);
  EXPECT_EQ(f.canonical(6).value, 6u);
}

TEST(PrimeField, ExhaustiveGf7TablesAgainstIntegerArithmetic) {
  const PrimeField f(7);
  for (std::uint32_t a = 0; a < 7; ++a) {
    for (std::uint32_t b = 0; b < 7; ++b) {
      EXPECT_EQ(f.add(el(a), el(b)).value, (a + b) % 7);
      EXPECT_EQ(f.sub(el(a), el(b)).value, (a + 7 - b) % 7);
      EXPECT_EQ(f.mul(el(a), el(b)).value, a * b % 7);
    }
    EXPECT_EQ(f.neg(el(a)).value, (7 - a) % 7);
  }
  EXPECT_EQ(f.mul(el(3), el(5)).value, 1u);
  EXPECT_EQ(f.sub(el(2), el(5)).value, 4u);
}

TEST(PrimeField, InverseByExhaustiveSearch) {
  for (std::uint32_t p : {7u, 101u, 131063u}) {
    const PrimeField f(p);
    for (std::uint32_t a = 1; a < std::min(p, 300u); ++a) {
      const std::uint32_t b = f.inv(el(a)).value;
      EXPECT_EQ(std::uint64_t{a} * b % p, 1u) << "p=" << p << " a=" << a;
    }
  }
  EXPECT_EQ(PrimeField(7).inv(el(3)).value, 5u);
  EXPECT_EQ(PrimeField(101).inv(el(2)).value, 51u);
  EXPECT_EQ(PrimeField(131063).inv(el(1)).value, 1u);
  EXPECT_THROW(PrimeField(7).inv(el(0)), DivisionByZero);
  EXPECT_THROW(PrimeField(7).div(el(1), el(0)), DivisionByZero);
}

TEST(PrimeField, AddIdentity) {
  const PrimeField f(131063);
  for (std::uint32_t x : {0u, 1u, 77u, 131062u}) EXPECT_EQ(f.add(el(x), f.zero()).value, x);
}

TEST(ReductionCounter, CountsOnlyActualReductions) {
  const PrimeField f(7);
  ReductionCounter rc;
  f.add(el(2), el(3), &rc);
  EXPECT_EQ(rc.count(), 0u);
  f.add(el(5), el(3), &rc);
  EXPECT_EQ(rc.count(), 1u);
  f.sub(el(5), el(3), &rc);
  EXPECT_EQ(rc.count(), 1u);
  f.sub(el(3), el(5), &rc);
  EXPECT_EQ(rc.count(), 2u);
  f.neg(el(0), &rc);
  EXPECT_EQ(rc.count(), 2u);
  f.neg(el(4), &rc);
  EXPECT_EQ(rc.count(), 3u);
  f.mul(el(1), el(1), &rc);
  EXPECT_EQ(rc.count(), 4u);
  f.inv(el(3), &rc);
  EXPECT_EQ(rc.count(), 5u);
  rc.reset();
  EXPECT_EQ(rc.count(), 0u);
}

TEST(DotAccumulate, SmallCases) {
  const PrimeField f(7);
  ReductionCounter rc;
  EXPECT_EQ(f.dot_accumulate(std::span<const FieldElement>{}, std::span<const FieldElement>{}, &rc).value, 0u);
  EXPECT_EQ(rc.count(), 0u);
  const std::vector<FieldElement> u{el(3), el(5)}, v{el(2), el(4)};
  EXPECT_EQ(f.dot_accumulate(view(u), view(v), &rc).value, 5u);
  EXPECT_EQ(rc.count(), 1u);
  const std::vector<FieldElement> w{el(1)};
  EXPECT_THROW(f.dot_accumulate(view(u), view(w)), DimensionError);
}

TEST(DotAccumulate, MatchesPerTermReferenceWithFewerReductions) {
  const PrimeField f(kDefaultPrime);
  std::mt19937_64 gen(11);
  std::uniform_int_distribution<std::uint32_t> d(0, kDefaultPrime - 1);
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<std::uint32_t> u(1000), v(1000);
    for (auto& x : u) x = d(gen);
    for (auto& x : v) x = d(gen);
    std::vector<FieldElement> fu, fv;
    for (auto x : u) fu.push_back(el(x));
    for (auto x : v) fv.push_back(el(x));
    ReductionCounter rc;
    EXPECT_EQ(f.dot_accumulate(view(fu), view(fv), &rc).value, naive_dot(kDefaultPrime, u, v));
    // Products are below 2^34, so 1000 of them never overflow 64 bits.
    EXPECT_EQ(rc.count(), 1u);
    EXPECT_LT(rc.count(), 1000u);
  }
}

TEST(DotAccumulate, OverflowCadenceForLargestPrime) {
  // (p-1)^2 = 2^62 - 2^33 + 4: four such products fit in 64 bits, a fifth
  // does not, and after a reduction four more fit again. So a length-n dot
  // of all (p-1) entries reduces 1 + floor((n-1)/4) times.
  const std::uint32_t p = PrimeField::kMaxPrime;
  const PrimeField f(p);
  for (std::size_t n = 1; n <= 40; ++n) {
    const std::vector<std::uint32_t> u(n, p - 1);
    const std::vector<FieldElement> fu(n, el(p - 1));
    ReductionCounter rc;
    EXPECT_EQ(f.dot_accumulate(view(fu), view(fu), &rc).value, naive_dot(p, u, u));
    EXPECT_EQ(rc.count(), 1 + (n - 1) / 4) << "n=" << n;
  }
}

TEST(DotAccumulate, StridedViews) {
  const PrimeField f(101);
  const std::vector<FieldElement> data{el(1), el(2), el(3), el(4), el(5), el(6)};
  // Every other element: (1,3,5) . (2,4,6) = 2 + 12 + 30 = 44.
  const StridedRange odd{data.data(), 3, 2}, even{data.data() + 1, 3, 2};
  EXPECT_EQ(f.dot_accumulate(odd, even).value, 44u);
}

TEST(PrimeField, IsPrime) {
  EXPECT_TRUE(is_prime(2));
  EXPECT_TRUE(is_prime(131063));
  EXPECT_FALSE(is_prime(131065));
  EXPECT_FALSE(is_prime(0));
  EXPECT_FALSE(is_prime(1));
}

}  // namespace
}  // namespace pluq
