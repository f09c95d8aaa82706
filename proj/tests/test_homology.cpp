#include <gtest/gtest.h>

#include "corpus.hpp"
#include "kneser/construct.hpp"
#include "kneser/homology.hpp"
#include "oracles.hpp"

using namespace kneser;

namespace {

AbelianGroup cyclic(long long n) { return {0, {n}}; }

SparseMatrix sparse(const oracle::Dense& d) {
  SparseMatrix m(static_cast<int>(d.size()), d.empty() ? 0 : static_cast<int>(d[0].size()));
  for (int r = 0; r < m.rows; ++r)
    for (int c = 0; c < m.cols; ++c)
      if (d[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] != 0)
        m.add(r, c, d[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)]);
  return m;
}

}  // namespace

TEST(AbelianGroup, Formatting) {
  EXPECT_EQ(AbelianGroup{}.str(), "0");
  EXPECT_EQ((AbelianGroup{2, {3, 6}}).str(), "Z^2 + Z/3 + Z/6");
}

TEST(AbelianGroup, DirectSumNormalizes) {
  const auto g = direct_sum(cyclic(2), cyclic(3));
  EXPECT_TRUE(isomorphic(g, cyclic(6)));
  EXPECT_EQ(elementary_divisors(AbelianGroup{0, {12}}), (std::vector<long long>{3, 4}));
  EXPECT_FALSE(isomorphic(direct_sum(cyclic(2), cyclic(2)), cyclic(4)));
}

TEST(Smith, DiagonalAndSimpleCases) {
  EXPECT_EQ(smith_invariants(sparse({{2, 0}, {0, 3}})), (std::vector<long long>{1, 6}));
  EXPECT_EQ(smith_invariants(sparse({{0, 0}, {0, 0}})), (std::vector<long long>{}));
  EXPECT_EQ(smith_invariants(sparse({{2, 4, 4}, {-6, 6, 12}, {10, -4, -16}})), (std::vector<long long>{2, 6, 12}));
}

// Property: Smith invariants agree with gcds of minors on random matrices.
TEST(Smith, MatchesDeterminantalDivisors) {
  oracle::Rng rng(17);
  for (int trial = 0; trial < 200; ++trial) {
    const int rows = 1 + rng.below(5), cols = 1 + rng.below(5);
    oracle::Dense d(static_cast<std::size_t>(rows), std::vector<long long>(static_cast<std::size_t>(cols)));
    const int spread = 1 + rng.below(9);
    for (auto& row : d)
      for (auto& x : row) x = rng.below(3) == 0 ? 0 : rng.below(2 * spread + 1) - spread;
    EXPECT_EQ(smith_invariants(sparse(d)), oracle::invariant_factors_by_minors(d)) << "trial " << trial;
  }
}

TEST(Homology, KnownManifolds) {
  EXPECT_EQ(homology(boundary_4simplex(), 1), AbelianGroup{});
  EXPECT_EQ(homology(projective_space(), 1), cyclic(2));
  EXPECT_EQ(homology(lens_space_3_1(), 1), cyclic(3));
  EXPECT_EQ(homology(lens_space_5_2(), 1), cyclic(5));
  EXPECT_EQ(homology(boundary_4simplex(), 0), (AbelianGroup{1, {}}));
  EXPECT_EQ(homology(boundary_4simplex(), 3), (AbelianGroup{1, {}}));
  EXPECT_EQ(homology(projective_space(), 2), AbelianGroup{});
}

TEST(Homology, MatchesMinorsOracle) {
  for (const auto& [name, t] : corpus::closed()) {
    if (t.size() > 5) continue;
    EXPECT_EQ(homology(t, 1), oracle::h1_by_minors(t)) << name;
  }
}

TEST(Homology, BoundaryOfBoundaryVanishes) {
  for (const auto& [name, t] : corpus::closed()) {
    for (int k = 2; k <= 3; ++k) {
      const auto a = oracle::dense(boundary_matrix(t, k - 1));
      const auto b = oracle::dense(boundary_matrix(t, k));
      for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b[0].size(); ++j) {
          long long s = 0;
          for (std::size_t m = 0; m < b.size(); ++m) s += a[i][m] * b[m][j];
          ASSERT_EQ(s, 0) << name << " k=" << k;
        }
    }
  }
}

TEST(Homology, ConnectedSumAddsFirstHomology) {
  const auto sum = connected_sum(projective_space(), lens_space_5_2());
  EXPECT_TRUE(isomorphic(homology(sum, 1), cyclic(10)));
  EXPECT_EQ(homology(sum, 2), AbelianGroup{});
}
