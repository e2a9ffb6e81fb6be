#include <random>

#include <gtest/gtest.h>

#include "liftaut/modlinalg.hpp"
#include "support.hpp"

using namespace liftaut;

namespace {

support::SmallMatrix random_matrix(std::mt19937& rng) {
  std::uniform_int_distribution<int> dim(1, 4), entry(-9, 9);
  const int rows = dim(rng), cols = dim(rng);
  support::SmallMatrix m(rows, std::vector<std::int64_t>(cols));
  for (auto& r : m)
    for (auto& x : r) x = entry(rng);
  return m;
}

BigVector big(const std::vector<std::int64_t>& v) { return BigVector(v.begin(), v.end()); }

}  // namespace

TEST(Modlinalg, DeterminantMatchesCofactorExpansion) {
  std::mt19937 rng(1);
  std::uniform_int_distribution<int> dim(1, 4), entry(-9, 9);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = dim(rng);
    support::SmallMatrix m(n, std::vector<std::int64_t>(n));
    for (auto& r : m)
      for (auto& x : r) x = entry(rng);
    EXPECT_EQ(determinant(support::to_int_matrix(m)), support::small_det(m));
  }
}

TEST(Modlinalg, SmithOfWorkedExample) {
  const auto m = support::to_int_matrix({{-3, -2}, {8, -3}});
  const auto s = smith(m);
  EXPECT_EQ(s.invariant_factors(), big({1, 25}));
  EXPECT_EQ(s.U * m * s.V, s.D);
}

TEST(Modlinalg, SmithEdgeCases) {
  const auto zero = smith(IntMatrix(2, 3));
  EXPECT_EQ(zero.rank, 0u);
  EXPECT_EQ(zero.D, IntMatrix(2, 3));
  const auto single = smith(support::to_int_matrix({{-6}}));
  EXPECT_EQ(single.invariant_factors(), big({6}));
  const auto col = smith(support::to_int_matrix({{4}, {6}}));
  EXPECT_EQ(col.invariant_factors(), big({2}));
}

TEST(Modlinalg, SmithPropertiesOnRandomMatrices) {
  std::mt19937 rng(2024);
  for (int trial = 0; trial < 1000; ++trial) {
    const auto small = random_matrix(rng);
    const auto m = support::to_int_matrix(small);
    const auto s = smith(m);
    ASSERT_EQ(s.U * m * s.V, s.D);
    EXPECT_EQ(abs(determinant(s.U)), 1);
    EXPECT_EQ(abs(determinant(s.V)), 1);
    for (std::size_t i = 0; i < s.D.rows(); ++i)
      for (std::size_t j = 0; j < s.D.cols(); ++j)
        if (i != j || i >= s.rank) {
          EXPECT_EQ(s.D(i, j), 0);
        }
    const auto f = s.invariant_factors();
    for (std::size_t i = 0; i + 1 < f.size(); ++i) {
      EXPECT_GT(f[i], 0);
      EXPECT_EQ(f[i + 1] % f[i], 0);
    }
    EXPECT_EQ(f, big(support::invariant_factors_by_minors(small)));
  }
}

TEST(Modlinalg, SolveCountsMatchBruteForce) {
  std::mt19937 rng(77);
  std::uniform_int_distribution<int> mod(1, 12), entry(-9, 9);
  for (int trial = 0; trial < 1000; ++trial) {
    const auto small = random_matrix(rng);
    const std::int64_t m = mod(rng);
    std::vector<std::int64_t> w(small.size());
    for (auto& x : w) x = entry(rng);
    const auto set = solve(support::to_int_matrix(small), big(w), BigInt(m));
    const auto expected = support::brute_count(small, w, m);
    ASSERT_TRUE(set.count.has_value());
    EXPECT_EQ(*set.count, expected);
    EXPECT_EQ(set.solvable, expected > 0);
    if (set.solvable) {
      const auto sols = enumerate(set, kAllSolutions);
      EXPECT_EQ(sols.size(), expected);
      EXPECT_TRUE(std::is_sorted(sols.begin(), sols.end()));
      for (const auto& v : sols)
        EXPECT_TRUE(satisfies(LinearSystem{support::to_int_matrix(small), big(w), m}, v));
    }
  }
}

TEST(Modlinalg, SolveOverIntegers) {
  // 2x + 4y = 6 has a one-parameter family.
  const auto set = solve(support::to_int_matrix({{2, 4}}), big({6}), BigInt(0));
  EXPECT_TRUE(set.solvable);
  EXPECT_TRUE(set.infinite());
  EXPECT_TRUE(satisfies(LinearSystem{support::to_int_matrix({{2, 4}}), big({6}), 0},
                        set.particular));
  ASSERT_EQ(set.kernel_basis.size(), 1u);
  EXPECT_EQ(set.kernel_basis[0].period, 0);
  EXPECT_THROW(enumerate(set, 5), LiftError);

  // 2x = 3 has no integer solution.
  EXPECT_FALSE(solve(support::to_int_matrix({{2}}), big({3}), BigInt(0)).solvable);
  // Full rank square system: unique.
  const auto unique = solve(support::to_int_matrix({{-3, -2}, {8, -3}}), big({-5, 5}), 0);
  ASSERT_TRUE(unique.solvable);
  EXPECT_EQ(unique.count, BigInt(1));
  EXPECT_EQ(unique.particular, big({1, 1}));
}

TEST(Modlinalg, UniqueSolutionsCoprimeToDeterminant) {
  // det 25: unique modulo anything coprime to 5.
  const auto m = support::to_int_matrix({{-3, -2}, {8, -3}});
  for (std::int64_t mod : {2, 3, 4, 6, 7, 9, 11, 12}) {
    EXPECT_EQ(solve(m, big({1, 0}), mod).count, BigInt(1)) << mod;
  }
  EXPECT_EQ(solve(m, big({0, 0}), 5).count, BigInt(5));
  EXPECT_EQ(solve(m, big({0, 0}), 25).count, BigInt(25));
}

TEST(Modlinalg, EnumerateRespectsCap) {
  const auto set = solve(support::to_int_matrix({{0, 0}}), big({0}), BigInt(3));
  EXPECT_EQ(*set.count, 9);
  EXPECT_EQ(enumerate(set, 4).size(), 4u);
  EXPECT_TRUE(enumerate(set, 0).empty());
  const auto first = enumerate(set, 1);
  EXPECT_EQ(first.front(), big({0, 0}));
}

TEST(Modlinalg, InverseMod) {
  EXPECT_EQ(inverse_mod(2, 9), 5);
  EXPECT_EQ(inverse_mod(-1, 7), 6);
  EXPECT_THROW(inverse_mod(3, 9), LiftError);
}

TEST(Modlinalg, MatrixShapeErrors) {
  EXPECT_THROW(IntMatrix::from_rows({{1, 2}, {3}}), LiftError);
  EXPECT_THROW(determinant(IntMatrix(2, 3)), LiftError);
}
