#include <gtest/gtest.h>

#include <random>

#include "firstfall/macaulay.hpp"
#include "firstfall/series.hpp"
#include "helpers.hpp"

using namespace firstfall;
using namespace firstfall::testing;

// Parallel kernels against their serial references on inputs large enough
// to span several OpenMP chunks.

TEST(Kernels, RankOnSparseRandomMatrices) {
  const FieldSpec f(65521);
  std::mt19937_64 rng(1);
  for (int trial = 0; trial < 5; ++trial) {
    SparseMatrix m;
    m.ncols = 150;
    for (int i = 0; i < 120 + 20 * trial; ++i) {
      SparseRow row;
      for (std::uint32_t c = 0; c < m.ncols; ++c)
        if (rng() % 9 == 0) row.cols.push_back(c), row.vals.push_back(f.random_nonzero(rng).value);
      m.rows.push_back(row);
    }
    const auto ref = rank_reference(m, f);
    EXPECT_EQ(rank_dense_parallel(m, f), ref);
    EXPECT_EQ(rank_sparse(m, f), ref);
  }
}

TEST(Kernels, RankOnMacaulayMatrices) {
  const auto sys = generic_standard(5, 6, 2, 2);
  for (int d = 2; d <= 5; ++d) {
    const auto m = macaulay_matrix(sys, {d});
    const auto ref = rank_reference(m.matrix, kP);
    EXPECT_EQ(rank_dense_parallel(m.matrix, kP), ref) << d;
    EXPECT_EQ(rank_sparse(m.matrix, kP), ref) << d;
  }
}

TEST(Kernels, SeriesOnThreeBlocks) {
  RingSpec r(kP, {{"a", 6}, {"b", 5}, {"c", 4}});
  std::vector<MultiDegree> degs;
  for (int i = 0; i < 9; ++i) degs.push_back(MultiDegree{1 + i % 2, 1, i % 3 == 0 ? 1 : 0});
  EXPECT_EQ(estimate_series(r, degs, 18, Kernel::Serial), estimate_series(r, degs, 18, Kernel::Parallel));
}
