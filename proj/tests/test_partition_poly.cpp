#include <gtest/gtest.h>

#include "crystal/laurent_poly.hpp"
#include "crystal/partition.hpp"

using namespace crystal;

TEST(Partition, DropsTrailingZerosAndRejectsIncreasingParts) {
  EXPECT_EQ(Partition({3, 1, 0, 0}).parts(), (std::vector<int>{3, 1}));
  EXPECT_THROW(Partition({1, 2}), std::domain_error);
  EXPECT_THROW(Partition({2, -1}), std::domain_error);
}

TEST(Partition, Conjugate) {
  EXPECT_EQ(Partition({5, 4, 2}).conjugate(), Partition({3, 3, 2, 2, 1}));
  EXPECT_EQ(Partition({}).conjugate(), Partition({}));
  for (int m = 0; m <= 7; ++m)
    for (const auto& p : partitions_of(m)) EXPECT_EQ(p.conjugate().conjugate(), p);
}

TEST(Partition, CountsMatchPartitionNumbers) {
  const int p[] = {1, 1, 2, 3, 5, 7, 11, 15, 22, 30};
  for (int m = 0; m < 10; ++m) EXPECT_EQ(static_cast<int>(partitions_of(m).size()), p[m]) << m;
  EXPECT_EQ(partitions_of(6, 2).size(), 4u);  // 6, 51, 42, 33
}

TEST(SkewShape, ContainmentAndRowBounds) {
  const SkewShape s(Partition({3, 2, 1}), Partition({1}));
  EXPECT_EQ(s.size(), 5);
  EXPECT_EQ(s.row_begin(0), 1);
  EXPECT_EQ(s.row_begin(1), 0);
  EXPECT_EQ(s.row_end(2), 1);
  EXPECT_THROW(SkewShape(Partition({2}), Partition({1, 1})), std::domain_error);
}

TEST(LaurentPoly, Arithmetic) {
  const auto q = LaurentPoly::monomial(1);
  const auto one = LaurentPoly::constant(1);
  const auto p = (one + q) * (one - q);
  EXPECT_EQ(p.coefficient(0), 1);
  EXPECT_EQ(p.coefficient(1), 0);
  EXPECT_EQ(p.coefficient(2), -1);
  EXPECT_EQ(p.to_string(), "1 - q^2");
  EXPECT_EQ(p.exact_divide(one - q), one + q);
  EXPECT_TRUE((q - q).is_zero());
}

TEST(LaurentPoly, ShiftInvertEvaluate) {
  LaurentPoly p;
  p.add_term(-1, 2);
  p.add_term(3, 1);
  EXPECT_EQ(p.min_degree(), -1);
  EXPECT_EQ(p.max_degree(), 3);
  EXPECT_EQ(p.shifted(1).min_degree(), 0);
  EXPECT_EQ(p.inverted().coefficient(1), 2);
  EXPECT_EQ(p.inverted().coefficient(-3), 1);
  EXPECT_EQ(p.at_one(), 3);
  EXPECT_EQ(p.to_string(), "2q^-1 + q^3");
  EXPECT_EQ(LaurentPoly().to_string(), "0");
}
