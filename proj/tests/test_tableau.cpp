#include <gtest/gtest.h>

#include <set>

#include "crystal/tableau.hpp"

using namespace crystal;

namespace {

// Every filling of the skew cells with letters 1..l(mu), kept when it is
// semistandard with content mu.
std::set<std::vector<std::vector<int>>> brute_force_fillings(const SkewShape& shape, const Partition& mu) {
  std::vector<std::pair<int, int>> cells;
  for (int r = 0; r < shape.rows(); ++r)
    for (int c = shape.row_begin(r); c < shape.row_end(r); ++c) cells.emplace_back(r, c);
  std::set<std::vector<std::vector<int>>> out;
  std::vector<int> vals(cells.size(), 1);
  const int m = mu.length();
  if (cells.empty()) {
    out.insert(std::vector<std::vector<int>>(static_cast<std::size_t>(shape.rows())));
    return out;
  }
  while (true) {
    std::vector<std::vector<int>> grid(static_cast<std::size_t>(shape.rows()));
    for (int r = 0; r < shape.rows(); ++r) grid[static_cast<std::size_t>(r)].assign(static_cast<std::size_t>(shape.row_end(r)), 0);
    std::vector<int> content(static_cast<std::size_t>(m), 0);
    for (std::size_t k = 0; k < cells.size(); ++k) {
      grid[static_cast<std::size_t>(cells[k].first)][static_cast<std::size_t>(cells[k].second)] = vals[k];
      ++content[static_cast<std::size_t>(vals[k] - 1)];
    }
    bool ok = content == mu.parts();
    for (std::size_t k = 0; ok && k < cells.size(); ++k) {
      const auto [r, c] = cells[k];
      const int v = vals[k];
      if (c > shape.row_begin(r) && grid[static_cast<std::size_t>(r)][static_cast<std::size_t>(c - 1)] > v) ok = false;
      if (r > 0 && c >= shape.row_begin(r - 1) && c < shape.row_end(r - 1) &&
          grid[static_cast<std::size_t>(r - 1)][static_cast<std::size_t>(c)] >= v)
        ok = false;
    }
    if (ok) {
      std::vector<std::vector<int>> rows(static_cast<std::size_t>(shape.rows()));
      for (std::size_t k = 0; k < cells.size(); ++k) rows[static_cast<std::size_t>(cells[k].first)].push_back(vals[k]);
      out.insert(rows);
    }
    std::size_t k = 0;
    while (k < vals.size() && vals[k] == m) vals[k++] = 1;
    if (k == vals.size()) break;
    ++vals[k];
  }
  return out;
}

// Charge of a word with partition content by standard subword extraction:
// scan leftward from the right end for 1, continue leftward cyclically for
// 2, 3, ...; inside a subword letter r+1 gets the index of r, plus one when
// r+1 sits to the right of r.
int word_charge(std::vector<int> w) {
  int total = 0;
  while (!w.empty()) {
    const int top = *std::max_element(w.begin(), w.end());
    std::vector<std::size_t> picked;
    std::size_t pos = w.size();
    for (int letter = 1; letter <= top; ++letter) {
      std::size_t found = w.size();
      for (std::size_t step = 1; step <= w.size(); ++step) {
        const std::size_t p = (pos + w.size() - step) % w.size();
        if (w[p] == letter && std::find(picked.begin(), picked.end(), p) == picked.end()) {
          found = p;
          break;
        }
      }
      if (found == w.size()) break;
      picked.push_back(found);
      pos = found;
    }
    int idx = 0;
    for (std::size_t r = 1; r < picked.size(); ++r) {
      if (picked[r] > picked[r - 1]) ++idx;
      total += idx;
    }
    std::sort(picked.rbegin(), picked.rend());
    for (auto p : picked) w.erase(w.begin() + static_cast<std::ptrdiff_t>(p));
  }
  return total;
}

// Reading word: rows bottom to top, left to right inside a row.
std::vector<int> reading_word(const Tableau& t) {
  std::vector<int> w;
  for (auto r = t.rows().size(); r-- > 0;)
    for (int v : t.rows()[r]) w.push_back(v);
  return w;
}

std::vector<SkewShape> small_shapes(int max_outer) {
  std::vector<SkewShape> out;
  for (int m = 1; m <= max_outer; ++m)
    for (const auto& outer : partitions_of(m))
      for (int k = 0; k < m; ++k)
        for (const auto& inner : partitions_of(k))
          if (outer.contains(inner)) out.emplace_back(outer, inner);
  return out;
}

const Tableau five_four_two() {
  return Tableau(SkewShape(Partition({5, 4, 2})), {{1, 1, 1, 2, 4}, {2, 2, 3, 4}, {3, 5}});
}

}  // namespace

TEST(Tableau, ValidatesSemistandardness) {
  EXPECT_THROW(Tableau(SkewShape(Partition({2})), {{2, 1}}), std::domain_error);
  EXPECT_THROW(Tableau(SkewShape(Partition({1, 1})), {{1}, {1}}), std::domain_error);
  EXPECT_NO_THROW(Tableau(SkewShape(Partition({2, 1}), Partition({1})), {{1}, {1}}));
}

TEST(Tableau, EnumerationMatchesBruteForce) {
  for (const auto& shape : small_shapes(6)) {
    if (shape.size() > 5) continue;
    for (const auto& mu : partitions_of(shape.size())) {
      std::set<std::vector<std::vector<int>>> got;
      for (const auto& t : enumerate_tableaux(shape, mu)) EXPECT_TRUE(got.insert(t.rows()).second);
      EXPECT_EQ(got, brute_force_fillings(shape, mu)) << shape.to_string() << " mu=" << mu.to_string();
    }
  }
}

TEST(Charge, FiveFourTwoTableau) {
  const auto t = five_four_two();
  const auto cr = charge_with_record(t);
  EXPECT_EQ(cr.charge, 6);
  EXPECT_EQ(cr.index, (std::vector<int>{0, 1, 1, 3, 1}));
  EXPECT_EQ(cr.record.suffixes(), (std::vector<std::vector<int>>{{0, 0, 0, 1, 1}, {0, 0, 1, 2}, {0, 1}}));
  EXPECT_EQ(cr.record.render(t),
            "round 1:\n1 1 1_0 2 4_1\n2 2_0 3 4\n3_0 5_1\n"
            "round 2:\n1 1_0 . 2 .\n2_0 . 3_1 4_2\n. .\n"
            "round 3:\n1_0 . . 2_1 .\n. . . .\n. .\n");
}

TEST(Charge, MatchesStandardSubwordChargeOfReadingWord) {
  for (const auto& shape : small_shapes(7)) {
    if (shape.size() > 6) continue;
    for (const auto& mu : partitions_of(shape.size()))
      for (const auto& t : enumerate_tableaux(shape, mu))
        EXPECT_EQ(charge(t), word_charge(reading_word(t))) << t.to_string();
  }
}

TEST(Charge, SmallValues) {
  EXPECT_EQ(charge(Tableau(SkewShape(Partition({2})), {{1, 2}})), 1);
  EXPECT_EQ(charge(Tableau(SkewShape(Partition({1, 1})), {{1}, {2}})), 0);
  EXPECT_EQ(charge(Tableau(SkewShape(Partition({3})), {{1, 2, 3}})), 3);
}

TEST(Bijection, TableauWordRoundTrip) {
  for (Flavor fl : {Flavor::Column, Flavor::Row}) {
    for (const auto& shape : small_shapes(5)) {
      const int n = minimal_rank(fl, shape.outer()) + 1;
      for (const auto& mu : partitions_of(shape.size())) {
        for (const auto& t : enumerate_tableaux(shape, mu)) {
          const auto w = tableau_to_word(t, fl, n);
          EXPECT_TRUE(is_highest(w)) << w.label();
          const auto back = word_to_tableau(w, shape.inner());
          EXPECT_EQ(back.rows(), t.rows());
          EXPECT_EQ(back.shape().outer(), shape.outer());
        }
      }
    }
  }
}

TEST(Bijection, FiveFourTwoRowWord) {
  const auto w = tableau_to_word(five_four_two(), Flavor::Row, 3);
  EXPECT_EQ(w.label(), "111⊗122⊗23⊗12⊗3");
  EXPECT_THROW(tableau_to_word(five_four_two(), Flavor::Row, 2), std::domain_error);
}

TEST(LocalIndex, CountsDownLines) {
  const CrystalElement a(Flavor::Column, 4, {1, 2, 3});
  const std::vector<CrystalElement> rest{CrystalElement(Flavor::Column, 4, {2, 4}), CrystalElement(Flavor::Column, 4, {1})};
  const auto order = bottom_up_order(a);
  const auto li = local_index(a, order, rest);
  // 3 -> 2, then 2 -> 4 is a down line past the first |b_last| = 1 lines; then 2 -> 1.
  EXPECT_EQ(li.orders[1], (std::vector<int>{2, 4}));
  EXPECT_EQ(li.steps, (std::vector<int>{0, 0}));
  EXPECT_EQ(li.orders[2], (std::vector<int>{1}));
  const std::vector<int> bad{1, 2};
  EXPECT_THROW(local_index(a, bad, rest), std::domain_error);
}
