#include <gtest/gtest.h>

#include "crystal/paths.hpp"

using namespace crystal;

namespace {
LaurentPoly poly(std::initializer_list<std::pair<int, long long>> terms) {
  LaurentPoly p;
  for (auto [e, c] : terms) p.add_term(e, c);
  return p;
}
std::string labels(const std::vector<CrystalElement>& p) {
  std::string s;
  for (const auto& b : p) s += (s.empty() ? "" : " ") + b.label();
  return s;
}
}  // namespace

TEST(GroundState, RowAndColumn) {
  // b_L ... b_1 written left to right; p_j = (i + 1 - j)^k.
  EXPECT_EQ(labels(ground_state_path({Flavor::Row, 3, 1, 0, 1})), "1 2 3");
  EXPECT_EQ(labels(ground_state_path({Flavor::Row, 3, 2, 1, 1})), "11 22 33 11");
  EXPECT_EQ(labels(ground_state_path({Flavor::Column, 3, 2, 0, 1})), "12 13 23");
  EXPECT_EQ(labels(ground_state_path({Flavor::Column, 4, 1, 0, 1})), "1 2 3 4");
}

TEST(ANorm, ClosedFormMatchesEnergySum) {
  for (int n = 2; n <= 4; ++n)
    for (int k = 1; k <= 3; ++k) {
      EXPECT_NO_THROW(check_ground_steps(n, k));
      for (int N = 0; N <= 3; ++N)
        for (int i = 0; i < n; ++i) {
          const PathSpec spec{Flavor::Row, n, k, i, N};
          EXPECT_EQ(a_norm(spec), k * n * N * (N - 1) / 2 + k * N * i);
          EXPECT_EQ(a_norm_energy_sum(spec), a_norm(spec));
        }
    }
}

TEST(LambdaN, RowAndColumnShapes) {
  EXPECT_EQ(lambda_N(Partition({1, 1}), {Flavor::Row, 2, 1, 0, 3}), Partition({3, 3}));
  EXPECT_EQ(lambda_N(Partition({2}), {Flavor::Row, 3, 2, 1, 1}), Partition({4, 2, 2}));
  EXPECT_EQ(lambda_N(Partition({2}), {Flavor::Row, 3, 2, 1, 0}), Partition({2}));
  EXPECT_EQ(lambda_N(Partition({2}), {Flavor::Row, 2, 1, 0, 0}), std::nullopt);
  EXPECT_EQ(lambda_N(Partition({1, 1}), {Flavor::Column, 2, 1, 0, 2}), Partition({2, 1, 1}));
  EXPECT_THROW(lambda_N(Partition({1}), {Flavor::Row, 2, 1, 0, 1}), std::domain_error);
  EXPECT_THROW(lambda_N(Partition({3}), {Flavor::Column, 2, 1, 0, 2}), std::domain_error);
  EXPECT_THROW(lambda_N(Partition({}), {Flavor::Row, 2, 1, 2, 1}), std::domain_error);
}

TEST(OneDCS, EqualsNormalizedKostka) {
  for (int n = 2; n <= 3; ++n)
    for (int k = 1; k <= 2; ++k)
      for (int i = 0; i < n; ++i)
        for (int N = 0; N <= 2; ++N) {
          const PathSpec spec{Flavor::Row, n, k, i, N};
          for (int m = 0; m <= 4; ++m)
            for (const auto& lam : partitions_of(m, n)) {
              if (((lam.size() - k * i) % n + n) % n != 0) continue;
              EXPECT_EQ(one_dcs(lam, spec), normalized_kostka(lam, spec)) << lam.to_string() << " n=" << n << " k=" << k
                                                                           << " i=" << i << " N=" << N;
            }
        }
  for (int N = 0; N <= 2; ++N) {
    const PathSpec spec{Flavor::Column, 3, 1, 0, N};
    for (const auto& lam : {Partition({}), Partition({1, 1, 1}), Partition({2, 1}), Partition({3})})
      EXPECT_EQ(one_dcs(lam, spec), normalized_kostka(lam, spec)) << lam.to_string() << " N=" << N;
  }
}

TEST(Branching, TwoByOneTable) {
  const auto t = branching_table(Flavor::Row, Partition({1, 1}), 2, 1, 0, 0, 3, 6);
  ASSERT_EQ(t.rows.size(), 4u);
  EXPECT_EQ(t.rows[0].normalized, LaurentPoly::constant(1));
  EXPECT_EQ(t.rows[1].normalized, LaurentPoly::constant(1));
  EXPECT_EQ(t.rows[2].normalized, poly({{0, 1}, {2, 1}}));
  EXPECT_EQ(t.rows[3].normalized, poly({{0, 1}, {2, 1}, {3, 1}, {4, 1}, {6, 1}}));
  EXPECT_EQ(t.rows[0].stable_upto, std::nullopt);
  EXPECT_EQ(t.rows[2].stable_upto, 1);
  EXPECT_EQ(t.rows[3].stable_upto, 2);
  EXPECT_EQ(t.rows[3].a_norm, 6);
}

TEST(Branching, LevelOneRowsAgreeWithColumns) {
  for (int n = 2; n <= 3; ++n)
    for (const auto& lam : partitions_of(n, n)) {
      const auto c = level_one_crosscheck(lam, n, 1, 3, 6);
      EXPECT_TRUE(c.consistent) << lam.to_string();
      EXPECT_GE(c.compared_upto, 0);
    }
  EXPECT_THROW(level_one_crosscheck(Partition({1, 1}), 2, 1, 1, 4), std::domain_error);
}

TEST(PathSpec, Validation) {
  EXPECT_THROW((PathSpec{Flavor::Row, 3, 1, 3, 1}).validate(), std::domain_error);
  EXPECT_THROW((PathSpec{Flavor::Column, 3, 3, 0, 1}).validate(), std::domain_error);
  EXPECT_THROW((PathSpec{Flavor::Column, 3, 1, 1, 1}).validate(), std::domain_error);
  EXPECT_THROW((PathSpec{Flavor::Row, 3, 1, 0, -1}).validate(), std::domain_error);
  EXPECT_EQ((PathSpec{Flavor::Row, 3, 1, 2, 2}).length(), 8);
}
