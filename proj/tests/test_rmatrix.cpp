#include <gtest/gtest.h>

#include "crystal/rmatrix.hpp"

using namespace crystal;

namespace {
CrystalElement col(int n, std::vector<int> e) { return CrystalElement(Flavor::Column, n, std::move(e)); }
CrystalElement row(int n, std::vector<int> e) { return CrystalElement(Flavor::Row, n, std::move(e)); }
}  // namespace

TEST(RMatrix, ColumnImages) {
  auto r = r_map(col(5, {1, 3, 5}), col(5, {2, 3}));
  EXPECT_EQ(r.out_left, col(5, {3, 5}));
  EXPECT_EQ(r.out_right, col(5, {1, 2, 3}));
  EXPECT_EQ(r.energy, 0);
  r = r_map(col(5, {1, 2, 4}), col(5, {3, 5}));
  EXPECT_EQ(r.out_left, col(5, {1, 4}));
  EXPECT_EQ(r.out_right, col(5, {2, 3, 5}));
  EXPECT_EQ(r.energy, -1);
}

TEST(RMatrix, RowImages) {
  auto r = r_map(row(3, {1, 1, 2}), row(3, {2, 3}));
  EXPECT_EQ(r.out_left, row(3, {1, 2}));
  EXPECT_EQ(r.out_right, row(3, {1, 2, 3}));
  EXPECT_EQ(r.energy, 0);
  r = r_map(row(3, {2, 2, 3}), row(3, {1, 2}));
  EXPECT_EQ(r.out_left, row(3, {2, 3}));
  EXPECT_EQ(r.out_right, row(3, {1, 2, 2}));
  EXPECT_EQ(r.energy, 2);
}

TEST(RMatrix, ColumnOneTwoTable) {
  // One nonzero entry; its sign follows the e_0 recursion with H(1 x 12) = 0.
  const EnergyTable t(Flavor::Column, 3, 1, 2);
  int nonzero = 0;
  for (const auto& e : t.entries()) {
    if (e.result.energy != 0) {
      ++nonzero;
      EXPECT_EQ(e.b1, col(3, {1}));
      EXPECT_EQ(e.b2, col(3, {2, 3}));
      EXPECT_EQ(e.result.energy, -1);
    }
  }
  EXPECT_EQ(nonzero, 1);
  EXPECT_EQ(t.size(), 9u);
}

TEST(RMatrix, RuleMatchesPropagatedTable) {
  for (Flavor fl : {Flavor::Column, Flavor::Row}) {
    for (int n = 2; n <= 4; ++n) {
      const int kmax = fl == Flavor::Column ? n - 1 : 3;
      for (int k = 1; k <= kmax; ++k) {
        for (int l = 1; l <= k; ++l) {
          const EnergyTable t(fl, n, k, l);
          for (const auto& e : t.entries()) EXPECT_EQ(r_map_rule(e.b1, e.b2), e.result) << e.b1.label() << "," << e.b2.label();
        }
      }
    }
  }
}

TEST(RMatrix, InvolutionAndEnergySymmetry) {
  for (Flavor fl : {Flavor::Column, Flavor::Row}) {
    const int n = 4;
    for (int k = 1; k <= 3; ++k) {
      for (int l = 1; l <= 3; ++l) {
        for (const auto& b1 : enumerate_basis(fl, n, k)) {
          for (const auto& b2 : enumerate_basis(fl, n, l)) {
            const auto r = r_map(b1, b2);
            const auto back = r_map(r.out_left, r.out_right);
            EXPECT_EQ(back.out_left, b1);
            EXPECT_EQ(back.out_right, b2);
            EXPECT_EQ(back.energy, r.energy);
          }
        }
      }
    }
  }
}

TEST(RMatrix, SameSizeIsIdentity) {
  for (const auto& b1 : enumerate_basis(Flavor::Row, 3, 2))
    for (const auto& b2 : enumerate_basis(Flavor::Row, 3, 2)) {
      const auto r = r_map(b1, b2);
      EXPECT_EQ(r.out_left, b1);
      EXPECT_EQ(r.out_right, b2);
    }
}

TEST(RMatrix, RankMismatchIsRejected) {
  EXPECT_THROW(r_map(col(3, {1}), col(4, {1})), std::domain_error);
  EXPECT_THROW(r_map(col(3, {1}), row(3, {1})), std::domain_error);
}

TEST(PassThrough, SumsEnergiesAlongTheWay) {
  const TensorWord w({row(3, {1, 1}), row(3, {2}), row(3, {3, 3})});
  const auto d = pass_through(w, 3);
  ASSERT_EQ(d.intermediates.size(), 3u);
  EXPECT_EQ(d.intermediates.front(), row(3, {3, 3}));
  int sum = 0;
  CrystalElement cur = w[2];
  for (std::size_t j = 2; j >= 1; --j) {
    const auto r = r_map(w[j - 1], cur);
    sum += r.energy;
    cur = r.out_left;
  }
  EXPECT_EQ(d.energy_sum(), sum);
  EXPECT_EQ(d.intermediates.back(), cur);
  EXPECT_THROW(pass_through(w, 4), std::out_of_range);
}
