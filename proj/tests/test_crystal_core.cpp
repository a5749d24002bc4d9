#include <gtest/gtest.h>

#include <random>

#include "crystal/crystal_core.hpp"

using namespace crystal;

namespace {

// Two-factor tensor rule: f acts on the left factor iff phi(b1) > eps(b2).
// Longer words are built by nesting, which checks the signature rule and the
// associativity of the tensor product at the same time.
struct Node {
  std::vector<CrystalElement> factors;
  int eps, phi;
};

Node leaf(const CrystalElement& b, int i) { return {{b}, b.epsilon(i), b.phi(i)}; }

Node combine(const Node& a, const Node& b) {
  Node out;
  out.factors = a.factors;
  out.factors.insert(out.factors.end(), b.factors.begin(), b.factors.end());
  out.eps = a.eps + std::max(0, b.eps - a.phi);
  out.phi = b.phi + std::max(0, a.phi - b.eps);
  return out;
}

// Index of the factor f_i acts on for the grouping given by `split`, or -1.
// split == 0 nests to the left ((b1 b2) b3) ..., otherwise to the right.
int oracle_f_factor(const std::vector<CrystalElement>& fs, int i, bool left_nested, std::size_t lo, std::size_t hi) {
  if (hi - lo == 1) return fs[lo].phi(i) > 0 ? static_cast<int>(lo) : -1;
  const std::size_t mid = left_nested ? hi - 1 : lo + 1;
  auto build = [&](auto&& self, std::size_t a, std::size_t b) -> Node {
    if (b - a == 1) return leaf(fs[a], i);
    const std::size_t m = left_nested ? b - 1 : a + 1;
    return combine(self(self, a, m), self(self, m, b));
  };
  const Node left = build(build, lo, mid), right = build(build, mid, hi);
  if (left.phi > right.eps) return oracle_f_factor(fs, i, left_nested, lo, mid);
  return oracle_f_factor(fs, i, left_nested, mid, hi);
}

int oracle_e_factor(const std::vector<CrystalElement>& fs, int i, bool left_nested, std::size_t lo, std::size_t hi) {
  if (hi - lo == 1) return fs[lo].epsilon(i) > 0 ? static_cast<int>(lo) : -1;
  const std::size_t mid = left_nested ? hi - 1 : lo + 1;
  auto build = [&](auto&& self, std::size_t a, std::size_t b) -> Node {
    if (b - a == 1) return leaf(fs[a], i);
    const std::size_t m = left_nested ? b - 1 : a + 1;
    return combine(self(self, a, m), self(self, m, b));
  };
  const Node left = build(build, lo, mid), right = build(build, mid, hi);
  if (left.phi >= right.eps) return oracle_e_factor(fs, i, left_nested, lo, mid);
  return oracle_e_factor(fs, i, left_nested, mid, hi);
}

Node oracle_node(const std::vector<CrystalElement>& fs, int i) {
  Node acc = leaf(fs[0], i);
  for (std::size_t j = 1; j < fs.size(); ++j) acc = combine(acc, leaf(fs[j], i));
  return acc;
}

}  // namespace

TEST(CrystalElement, RejectsIllegalEntries) {
  EXPECT_THROW(CrystalElement(Flavor::Column, 3, {2, 2}), std::domain_error);
  EXPECT_THROW(CrystalElement(Flavor::Row, 3, {3, 1}), std::domain_error);
  EXPECT_THROW(CrystalElement(Flavor::Row, 3, {4}), std::domain_error);
  EXPECT_NO_THROW(CrystalElement(Flavor::Row, 3, {2, 2}));
}

TEST(CrystalElement, ZeroArrowIsCyclic) {
  const CrystalElement b(Flavor::Row, 3, {1, 3, 3});
  EXPECT_EQ(b.phi(0), 2);
  EXPECT_EQ(b.epsilon(0), 1);
  EXPECT_EQ(b.f(0)->entry_vector(), (std::vector<int>{1, 1, 3}));
  EXPECT_EQ(b.e(0)->entry_vector(), (std::vector<int>{3, 3, 3}));
  const CrystalElement c(Flavor::Column, 3, {1, 3});
  EXPECT_FALSE(c.f(0).has_value());
  EXPECT_FALSE(c.e(0).has_value());
  EXPECT_EQ(CrystalElement(Flavor::Column, 3, {2, 3}).f(0)->entry_vector(), (std::vector<int>{1, 2}));
}

TEST(CrystalElement, BasisSizesAreBinomials) {
  EXPECT_EQ(enumerate_basis(Flavor::Column, 5, 2).size(), 10u);
  EXPECT_EQ(enumerate_basis(Flavor::Row, 3, 2).size(), 6u);
  EXPECT_EQ(enumerate_basis(Flavor::Row, 4, 3).size(), 20u);
}

TEST(Tensor, SignatureRuleMatchesNestedTensorRule) {
  std::mt19937 rng(7);
  for (Flavor fl : {Flavor::Column, Flavor::Row}) {
    for (int n = 2; n <= 4; ++n) {
      std::vector<std::vector<CrystalElement>> bases;
      for (int k = 1; k <= (fl == Flavor::Column ? n - 1 : 3); ++k) bases.push_back(enumerate_basis(fl, n, k));
      for (int trial = 0; trial < 300; ++trial) {
        std::vector<CrystalElement> fs;
        const int len = 1 + static_cast<int>(rng() % 4);
        for (int j = 0; j < len; ++j) {
          const auto& basis = bases[rng() % bases.size()];
          fs.push_back(basis[rng() % basis.size()]);
        }
        const TensorWord w(fs);
        for (int i = 0; i < n; ++i) {
          const Node node = oracle_node(fs, i);
          EXPECT_EQ(string_lengths(w, i), (StringLengths{node.eps, node.phi}));
          for (bool left_nested : {true, false}) {
            const int jf = oracle_f_factor(fs, i, left_nested, 0, fs.size());
            const int je = oracle_e_factor(fs, i, left_nested, 0, fs.size());
            const auto fw = apply_f(w, i);
            const auto ew = apply_e(w, i);
            ASSERT_EQ(fw.has_value(), jf >= 0) << w.label() << " i=" << i;
            ASSERT_EQ(ew.has_value(), je >= 0) << w.label() << " i=" << i;
            if (fw) { EXPECT_EQ(*fw, w.with_factor(static_cast<std::size_t>(jf), *fs[static_cast<std::size_t>(jf)].f(i))); }
            if (ew) { EXPECT_EQ(*ew, w.with_factor(static_cast<std::size_t>(je), *fs[static_cast<std::size_t>(je)].e(i))); }
          }
        }
      }
    }
  }
}

TEST(Tensor, EAndFAreInverse) {
  for (const auto& w : enumerate_words(Flavor::Row, 3, std::vector<int>{2, 1, 2})) {
    for (int i = 0; i < 3; ++i) {
      if (auto f = apply_f(w, i)) { EXPECT_EQ(apply_e(*f, i), w); }
      if (auto e = apply_e(w, i)) { EXPECT_EQ(apply_f(*e, i), w); }
      EXPECT_EQ(string_lengths(w, i).phi - string_lengths(w, i).epsilon, weight_of(w).pairing(i));
    }
  }
}

TEST(Graph, ColumnOneTimesTwoAtRankThree) {
  const std::vector<int> sizes{1, 2};
  const auto g = crystal_graph(Flavor::Column, 3, sizes);
  EXPECT_EQ(g.nodes.size(), 9u);
  std::size_t classical = 0;
  for (const auto& a : g.arrows) classical += a.color != 0;
  EXPECT_EQ(classical, 8u);
  // B(Lambda_1) x B(Lambda_2) splits into the adjoint and the trivial crystal.
  EXPECT_EQ(g.components(1), 2u);
  EXPECT_EQ(g.components(0), 1u);
}

TEST(Graph, NodeCapIsEnforced) {
  const std::vector<int> sizes{3, 3, 3};
  EXPECT_THROW(crystal_graph(Flavor::Row, 4, sizes, 100), ResourceError);
}

TEST(HighestWords, DepthFirstMatchesFilter) {
  const std::vector<int> sizes{2, 1, 1};
  for (Flavor fl : {Flavor::Column, Flavor::Row}) {
    std::vector<TensorWord> filtered;
    for (const auto& w : enumerate_words(fl, 3, sizes))
      if (is_highest(w)) filtered.push_back(w);
    for (const std::vector<int>& content : {std::vector<int>{2, 1, 1}, {2, 2, 0}, {3, 1, 0}}) {
      std::vector<TensorWord> expect;
      for (const auto& w : filtered)
        if (weight_of(w).counts == content) expect.push_back(w);
      auto got = enumerate_highest_words(fl, 3, sizes, content);
      std::sort(got.begin(), got.end());
      EXPECT_EQ(got, expect);
    }
  }
}
