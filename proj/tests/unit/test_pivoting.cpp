#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>

#include "oracles.hpp"
#include "pluq/errors.hpp"
#include "pluq/pivoting.hpp"

namespace pluq {
namespace {

using namespace pluq::testing;

constexpr SearchOrder kOrders[] = {SearchOrder::Row, SearchOrder::Col, SearchOrder::Lex, SearchOrder::RevLex,
                                   SearchOrder::Product};

TEST(Pivoting, SpellingsRoundTrip) {
  for (SearchOrder o : kOrders) EXPECT_EQ(parse_search_order(to_string(o)), o);
  for (PermStrategy s : {PermStrategy::Transposition, PermStrategy::Rotation})
    EXPECT_EQ(parse_perm_strategy(to_string(s)), s);
  EXPECT_EQ(to_string(SearchOrder::RevLex), "revlex");
  EXPECT_EQ(to_string(PermStrategy::Transposition), "trans");
  EXPECT_FALSE(parse_search_order("diagonal"));
  EXPECT_FALSE(parse_perm_strategy("swap"));
}

TEST(Pivoting, Preorders) {
  const Pivot a{0, 3}, c{1, 1}, g{2, 0};
  EXPECT_TRUE(strictly_precedes(SearchOrder::Lex, a, c));
  EXPECT_TRUE(strictly_precedes(SearchOrder::RevLex, g, c));
  EXPECT_FALSE(strictly_precedes(SearchOrder::Product, a, c));
  EXPECT_FALSE(strictly_precedes(SearchOrder::Product, c, a));
  EXPECT_TRUE(strictly_precedes(SearchOrder::Product, c, Pivot{1, 2}));
  EXPECT_TRUE(precedes_or_equal(SearchOrder::Row, Pivot{0, 4}, Pivot{0, 3}));
  EXPECT_FALSE(strictly_precedes(SearchOrder::Row, Pivot{0, 4}, Pivot{0, 3}));
  EXPECT_TRUE(strictly_precedes(SearchOrder::Col, Pivot{3, 0}, Pivot{0, 1}));
}

TEST(Pivoting, MinimalSetsOnStaircasePattern) {
  const PrimeField f(101);
  const auto a = preorder_pattern(f);
  using V = std::vector<Pivot>;
  EXPECT_EQ(minimal_pivots(a, 0, SearchOrder::Row), (V{{0, 3}, {0, 4}}));
  EXPECT_EQ(minimal_pivots(a, 0, SearchOrder::Col), (V{{2, 0}, {3, 0}}));
  EXPECT_EQ(minimal_pivots(a, 0, SearchOrder::Lex), (V{{0, 3}}));
  EXPECT_EQ(minimal_pivots(a, 0, SearchOrder::RevLex), (V{{2, 0}}));
  EXPECT_EQ(minimal_pivots(a, 0, SearchOrder::Product), (V{{0, 3}, {1, 1}, {2, 0}}));

  EXPECT_EQ(search_pivot(a, 0, SearchOrder::Lex), (Pivot{0, 3}));
  EXPECT_EQ(search_pivot(a, 0, SearchOrder::RevLex), (Pivot{2, 0}));
  EXPECT_EQ(search_pivot(a, 0, SearchOrder::Product), (Pivot{0, 3}));
  EXPECT_EQ(search_pivot(a, 0, SearchOrder::Row), (Pivot{0, 3}));
  EXPECT_EQ(search_pivot(a, 0, SearchOrder::Col), (Pivot{2, 0}));
}

TEST(Pivoting, ZeroRegionHasNoPivot) {
  const PrimeField f(7);
  auto a = DenseMatrix::from_rows(f, {{1, 2, 3}, {0, 0, 0}, {0, 0, 0}});
  for (SearchOrder o : kOrders) {
    EXPECT_FALSE(search_pivot(a, 1, o));
    EXPECT_TRUE(minimal_pivots(a, 1, o).empty());
    EXPECT_FALSE(search_pivot(DenseMatrix(f, 0, 0), 0, o));
  }
}

TEST(Pivoting, SearchReturnsAMinimalNonZero) {
  Gen gen(12);
  const PrimeField f(7);
  for (int t = 0; t < 300; ++t) {
    const auto a = random_mixed(f, 9, 9, gen);
    const std::size_t k = std::min(a.rows(), a.cols()) ? gen() % (std::min(a.rows(), a.cols()) + 1) : 0;
    for (SearchOrder o : kOrders) {
      const auto choice = search_pivot(a, k, o);
      bool any = false;
      for (std::size_t i = k; i < a.rows(); ++i)
        for (std::size_t j = k; j < a.cols(); ++j) {
          if (a(i, j).is_zero()) continue;
          any = true;
          ASSERT_TRUE(choice);
          EXPECT_FALSE(strictly_precedes(o, {i, j}, *choice));
        }
      EXPECT_EQ(any, choice.has_value());
      if (choice) EXPECT_FALSE(a(choice->row, choice->col).is_zero());
    }
  }
}

TEST(Pivoting, MoveToDiagonalIsNoOp) {
  const PrimeField f(7);
  const auto a0 = four_by_four_sample(f);
  for (auto rs : {PermStrategy::Transposition, PermStrategy::Rotation})
    for (auto cs : {PermStrategy::Transposition, PermStrategy::Rotation}) {
      auto a = a0;
      auto p = Permutation::identity(4), q = Permutation::identity(4);
      move_pivot(p, q, {1, 1}, 1, rs, cs, a);
      EXPECT_EQ(a, a0);
      EXPECT_TRUE(p.is_identity());
      EXPECT_TRUE(q.is_identity());
    }
}

TEST(Pivoting, RowRotationOrder) {
  const PrimeField f(7);
  auto a = DenseMatrix::from_rows(f, {{0}, {0}, {0}, {5}});
  auto p = Permutation::identity(4), q = Permutation::identity(1);
  move_pivot(p, q, {3, 0}, 0, PermStrategy::Rotation, PermStrategy::Rotation, a);
  EXPECT_EQ(p.to_string(), "4 1 2 3");
  EXPECT_EQ(a(0, 0).value, 5u);
}

TEST(Pivoting, ColumnTranspositionReordersTheWorkingRow) {
  const PrimeField f(101);
  auto a = transposition_trap(f);
  auto p = Permutation::identity(2), q = Permutation::identity(3);
  move_pivot(p, q, *search_pivot(a, 0, SearchOrder::Lex), 0, PermStrategy::Transposition,
             PermStrategy::Transposition, a);
  EXPECT_EQ(a(0, 0).value, 1u);
  EXPECT_EQ(a(1, 1).value, 3u);
  EXPECT_EQ(a(1, 2).value, 2u);
  EXPECT_EQ(q.to_string(), "3 2 1");
}

TEST(Pivoting, RotationsKeepAccumulatorsMonotone) {
  Gen gen(13);
  const PrimeField f(7);
  for (int t = 0; t < 200; ++t) {
    auto a = random_matrix(f, 1 + gen() % 9, 1 + gen() % 9, 0.3, gen);
    auto p = Permutation::identity(a.rows()), q = Permutation::identity(a.cols());
    const SearchOrder o = kOrders[gen() % 5];
    for (std::size_t k = 0; k < std::min(a.rows(), a.cols()); ++k) {
      const auto c = search_pivot(a, k, o);
      if (!c) break;
      move_pivot(p, q, *c, k, PermStrategy::Rotation, PermStrategy::Rotation, a);
      ASSERT_FALSE(a(k, k).is_zero());
      ASSERT_TRUE(p.is_k_monotone(k + 1));
      ASSERT_TRUE(q.is_k_monotone(k + 1));
    }
  }
}

TEST(Pivoting, PivotingMatrix) {
  const PrimeField f(7);
  EXPECT_EQ(pivoting_matrix(Permutation::identity(3), Permutation::identity(3), 3).expand(f),
            DenseMatrix::identity(f, 3));
  EXPECT_EQ(pivoting_matrix(Permutation::identity(3), Permutation::identity(4), 0).rank(), 0u);
  EXPECT_EQ(pivoting_matrix(Permutation({1, 0}), Permutation::identity(2), 1), pivots_1based(2, 2, {{2, 1}}));
  EXPECT_THROW(pivoting_matrix(Permutation::identity(2), Permutation::identity(3), 3), InvalidArgument);
}

TEST(Pivoting, PivotingMatrixIsPTimesIrTimesQ) {
  Gen gen(14);
  const PrimeField f(7);
  for (int t = 0; t < 100; ++t) {
    const std::size_t m = 1 + gen() % 6, n = 1 + gen() % 6, r = gen() % (std::min(m, n) + 1);
    std::vector<std::size_t> pi(m), qi(n);
    std::iota(pi.begin(), pi.end(), std::size_t{0});
    std::iota(qi.begin(), qi.end(), std::size_t{0});
    std::shuffle(pi.begin(), pi.end(), gen);
    std::shuffle(qi.begin(), qi.end(), gen);
    const Permutation p(pi), q(qi);
    DenseMatrix ir(f, m, n);
    for (std::size_t i = 0; i < r; ++i) ir(i, i) = f.one();
    // Left factor of A = P (.) Q is P.matrix()^T.
    const auto dense = naive_matmul(naive_matmul(p.matrix(f).transpose(), ir), q.matrix(f));
    EXPECT_EQ(pivoting_matrix(p, q, r).expand(f), dense);
  }
}

TEST(Pivoting, StrategyTable) {
  const auto table = strategy_table();
  ASSERT_EQ(table.size(), 11u);
  const auto rr = claims_for(SearchOrder::Lex, PermStrategy::Rotation, PermStrategy::Rotation);
  ASSERT_TRUE(rr);
  EXPECT_TRUE(rr->rank_profile_matrix && rr->row_monotone && rr->col_monotone);
  const auto lt = claims_for(SearchOrder::Lex, PermStrategy::Transposition, PermStrategy::Transposition);
  ASSERT_TRUE(lt);
  EXPECT_TRUE(lt->row_profile);
  EXPECT_FALSE(lt->col_profile || lt->rank_profile_matrix);
  const auto pr = claims_for(SearchOrder::Product, PermStrategy::Rotation, PermStrategy::Transposition);
  ASSERT_TRUE(pr);
  EXPECT_TRUE(pr->row_profile && pr->row_monotone);
  EXPECT_FALSE(pr->col_profile);
  EXPECT_FALSE(claims_for(SearchOrder::Row, PermStrategy::Rotation, PermStrategy::Rotation));
  std::size_t full = 0;
  for (const auto& row : table) full += row.claims.rank_profile_matrix;
  EXPECT_EQ(full, 5u);
}

}  // namespace
}  // namespace pluq
