#pragma once

/*
  Combinatorial R-matrix and energy functions.

  For b1 in B_k and b2 in B_l (same flavor, k >= l) the isomorphism
  B_k x B_l -> B_l x B_k and the energy H(b1, b2) come from pairing the dots
  of b2 (second column) with dots of b1 (first column):

    Column: partner of a dot at height a is the highest unpaired b1 dot not
            above a; if none exists the search wraps to the top.
    Row:    partner is the lowest unpaired b1 dot strictly above a; if none
            exists the search wraps to the bottom.

  A wrapped pair is a winding. The image keeps the paired b1 dots on the left
  and slides the k-l unpaired ones to the right. Column energy is minus the
  number of windings, Row energy is plus that number.

  Normalization: Column H = 0 on (1..k) x (1..l); Row H = min(k,l) on
  1^k x 1^l. For k < l the rule does not apply and both the image and the
  energy are obtained by propagating along the affine crystal graph
  (EnergyTable), which also serves as an independent check of the rule.
*/

#include <algorithm>
#include <cstddef>
#include <deque>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "crystal/crystal_core.hpp"

namespace crystal {

struct RResult {
  CrystalElement out_left;   // b2', same size as b2
  CrystalElement out_right;  // b1', same size as b1
  int energy;
  friend bool operator==(const RResult&, const RResult&) = default;
};

namespace detail {

inline void check_pair(const CrystalElement& b1, const CrystalElement& b2) {
  if (b1.flavor() != b2.flavor()) throw std::domain_error("r_map: factors have different flavors");
  if (b1.rank() != b2.rank()) throw std::domain_error("r_map: factors have different ranks");
}

}  // namespace detail

/// Pairing rule with an explicit processing order of the b2 dots, given as a
/// permutation of 0..|b2|-1 indexing b2's letters top-down. Requires |b1| >= |b2|.
inline RResult r_map_rule(const CrystalElement& b1, const CrystalElement& b2,
                          std::span<const std::size_t> order) {
  detail::check_pair(b1, b2);
  if (b1.size() < b2.size()) throw std::domain_error("r_map_rule: requires |b1| >= |b2|");
  if (order.size() != static_cast<std::size_t>(b2.size()))
    throw std::domain_error("r_map_rule: order must list every dot of b2");
  {
    std::vector<std::size_t> check(order.begin(), order.end());
    std::sort(check.begin(), check.end());
    for (std::size_t j = 0; j < check.size(); ++j)
      if (check[j] != j) throw std::domain_error("r_map_rule: order is not a permutation");
  }

  const auto left = b1.entries();
  const auto right = b2.entries();
  const bool column = b1.flavor() == Flavor::Column;
  std::vector<bool> used(left.size(), false);
  int windings = 0;

  for (std::size_t idx : order) {
    const int a = right[idx];
    std::ptrdiff_t pick = -1;
    if (column) {
      // smallest unpaired letter >= a, else wrap to the smallest unpaired
      for (std::size_t j = 0; j < left.size() && pick < 0; ++j)
        if (!used[j] && left[j] >= a) pick = static_cast<std::ptrdiff_t>(j);
      if (pick < 0) {
        ++windings;
        for (std::size_t j = 0; j < left.size() && pick < 0; ++j)
          if (!used[j]) pick = static_cast<std::ptrdiff_t>(j);
      }
    } else {
      // largest unpaired letter < a, else wrap to the largest unpaired
      for (std::size_t j = left.size(); j-- > 0 && pick < 0;)
        if (!used[j] && left[j] < a) pick = static_cast<std::ptrdiff_t>(j);
      if (pick < 0) {
        ++windings;
        for (std::size_t j = left.size(); j-- > 0 && pick < 0;)
          if (!used[j]) pick = static_cast<std::ptrdiff_t>(j);
      }
    }
    used[static_cast<std::size_t>(pick)] = true;
  }

  std::vector<int> paired, slid(right.begin(), right.end());
  for (std::size_t j = 0; j < left.size(); ++j) (used[j] ? paired : slid).push_back(left[j]);
  std::sort(slid.begin(), slid.end());
  return {CrystalElement(b1.flavor(), b1.rank(), std::move(paired)),
          CrystalElement(b1.flavor(), b1.rank(), std::move(slid)), column ? -windings : windings};
}

/// Pairing rule in the default top-down order.
inline RResult r_map_rule(const CrystalElement& b1, const CrystalElement& b2) {
  std::vector<std::size_t> order(static_cast<std::size_t>(b2.size()));
  std::iota(order.begin(), order.end(), std::size_t{0});
  return r_map_rule(b1, b2, order);
}

/// Normalization point of H for B_k x B_l and its prescribed energy.
inline std::pair<TensorWord, int> energy_anchor(Flavor flavor, int n, int k, int l) {
  auto make = [&](int size) {
    std::vector<int> e(static_cast<std::size_t>(size));
    if (flavor == Flavor::Column)
      std::iota(e.begin(), e.end(), 1);
    else
      std::fill(e.begin(), e.end(), 1);
    return CrystalElement(flavor, n, std::move(e));
  };
  return {TensorWord({make(k), make(l)}), flavor == Flavor::Column ? 0 : std::min(k, l)};
}

namespace detail {

// Change of H along e_0: +1 if e_0 acts on the left factor on both sides of
// the isomorphism, -1 if on the right factor on both sides, 0 otherwise.
inline int energy_step(const TensorWord& x, const TensorWord& image, int i) {
  if (i != 0) return 0;
  const bool left_x = x[0].phi(0) >= x[1].epsilon(0);
  const bool left_y = image[0].phi(0) >= image[1].epsilon(0);
  if (left_x && left_y) return 1;
  if (!left_x && !left_y) return -1;
  return 0;
}

}  // namespace detail

/// Energy function and isomorphism on all of B_k x B_l, computed by breadth
/// first propagation over the affine crystal graph from the normalization
/// point. The image of the anchor is the unique element of B_l x B_k of the
/// same weight; every later image follows from commutation with e_i and f_i.
class EnergyTable {
 public:
  struct Entry {
    CrystalElement b1;
    CrystalElement b2;
    RResult result;
  };

  EnergyTable(Flavor flavor, int n, int k, int l)
      : flavor_(flavor),
        rank_(n),
        left_(enumerate_basis(flavor, n, k)),
        right_(enumerate_basis(flavor, n, l)) {
    const std::size_t total = left_.size() * right_.size();
    energy_.assign(total, 0);
    image_.assign(total, std::nullopt);

    auto [anchor, h0] = energy_anchor(flavor, n, k, l);
    const WeightVec target = weight_of(anchor);
    std::optional<TensorWord> seed;
    for (const auto& y : enumerate_words(flavor, n, std::vector<int>{l, k})) {
      if (weight_of(y) != target) continue;
      if (seed) throw std::logic_error("energy table: anchor image is not determined by weight");
      seed = y;
    }
    if (!seed) throw std::logic_error("energy table: no element of matching weight");

    std::vector<bool> seen(total, false);
    std::deque<std::size_t> queue;
    const std::size_t a = id(anchor[0], anchor[1]);
    seen[a] = true;
    energy_[a] = h0;
    image_[a] = *seed;
    queue.push_back(a);

    auto visit = [&](const TensorWord& x, const TensorWord& y, int h) {
      const std::size_t v = id(x[0], x[1]);
      if (seen[v]) {
        if (energy_[v] != h || *image_[v] != y)
          throw std::logic_error("energy table: inconsistent propagation at " + x.label());
        return;
      }
      seen[v] = true;
      energy_[v] = h;
      image_[v] = y;
      queue.push_back(v);
    };

    while (!queue.empty()) {
      const std::size_t v = queue.front();
      queue.pop_front();
      const TensorWord x({left_[v / right_.size()], right_[v % right_.size()]});
      const TensorWord& y = *image_[v];
      for (int i = 0; i < n; ++i) {
        if (auto xe = apply_e(x, i)) {
          auto ye = apply_e(y, i);
          if (!ye) throw std::logic_error("energy table: e_i does not commute at " + x.label());
          visit(*xe, *ye, energy_[v] + detail::energy_step(x, y, i));
        }
        if (auto xf = apply_f(x, i)) {
          auto yf = apply_f(y, i);
          if (!yf) throw std::logic_error("energy table: f_i does not commute at " + x.label());
          visit(*xf, *yf, energy_[v] - detail::energy_step(*xf, *yf, i));
        }
      }
    }
    if (std::find(seen.begin(), seen.end(), false) != seen.end())
      throw std::logic_error("energy table: tensor product is not connected");
  }

  Flavor flavor() const noexcept { return flavor_; }
  int rank() const noexcept { return rank_; }
  int left_size() const noexcept { return left_.front().size(); }
  int right_size() const noexcept { return right_.front().size(); }
  std::size_t size() const noexcept { return energy_.size(); }

  int energy(const CrystalElement& b1, const CrystalElement& b2) const { return energy_[id(b1, b2)]; }

  RResult lookup(const CrystalElement& b1, const CrystalElement& b2) const {
    const std::size_t v = id(b1, b2);
    return {(*image_[v])[0], (*image_[v])[1], energy_[v]};
  }

  /// All pairs, b1 major, both in lexicographic order.
  std::vector<Entry> entries() const {
    std::vector<Entry> out;
    out.reserve(size());
    for (std::size_t v = 0; v < size(); ++v) {
      const auto& b1 = left_[v / right_.size()];
      const auto& b2 = right_[v % right_.size()];
      out.push_back({b1, b2, {(*image_[v])[0], (*image_[v])[1], energy_[v]}});
    }
    return out;
  }

 private:
  std::size_t id(const CrystalElement& b1, const CrystalElement& b2) const {
    return index_in(left_, b1) * right_.size() + index_in(right_, b2);
  }

  static std::size_t index_in(const std::vector<CrystalElement>& basis, const CrystalElement& b) {
    auto it = std::lower_bound(basis.begin(), basis.end(), b);
    if (it == basis.end() || *it != b) throw std::domain_error("energy table: element not in basis");
    return static_cast<std::size_t>(it - basis.begin());
  }

  Flavor flavor_;
  int rank_;
  std::vector<CrystalElement> left_;
  std::vector<CrystalElement> right_;
  std::vector<int> energy_;
  std::vector<std::optional<TensorWord>> image_;
};

inline EnergyTable energy_table(Flavor flavor, int n, int k, int l) { return EnergyTable(flavor, n, k, l); }

/// R-matrix image and energy of b1 x b2. Uses the pairing rule when
/// |b1| >= |b2| and graph propagation otherwise.
inline RResult r_map(const CrystalElement& b1, const CrystalElement& b2) {
  detail::check_pair(b1, b2);
  if (b1.size() >= b2.size()) return r_map_rule(b1, b2);
  static std::mutex mu;
  static std::map<std::tuple<Flavor, int, int, int>, std::shared_ptr<const EnergyTable>> cache;
  std::shared_ptr<const EnergyTable> table;
  {
    std::lock_guard lock(mu);
    auto& slot = cache[{b1.flavor(), b1.rank(), b1.size(), b2.size()}];
    if (!slot) slot = std::make_shared<const EnergyTable>(b1.flavor(), b1.rank(), b1.size(), b2.size());
    table = slot;
  }
  return table->lookup(b1, b2);
}

/// Moving factor i (1-based) of a word leftward through factors i-1, ..., 1.
///   intermediates[m] = b_i^{(i-m)}: intermediates.front() = b_i, back() = b_i^{(1)}
///   outputs[j-1]     = b_j'
///   energies[j-1]    = H(b_j, b_i^{(j+1)})
struct PassThroughDiagram {
  std::vector<CrystalElement> intermediates;
  std::vector<CrystalElement> outputs;
  std::vector<int> energies;

  int energy_sum() const noexcept {
    int s = 0;
    for (int h : energies) s += h;
    return s;
  }
};

inline PassThroughDiagram pass_through(std::span<const CrystalElement> factors, std::size_t i) {
  if (i < 1 || i > factors.size()) throw std::out_of_range("pass_through: component index out of range");
  PassThroughDiagram d;
  d.outputs.resize(i - 1, factors[0]);
  d.energies.resize(i - 1, 0);
  CrystalElement cur = factors[i - 1];
  d.intermediates.push_back(cur);
  for (std::size_t j = i - 1; j >= 1; --j) {
    RResult r = r_map(factors[j - 1], cur);
    d.energies[j - 1] = r.energy;
    d.outputs[j - 1] = r.out_right;
    cur = r.out_left;
    d.intermediates.push_back(cur);
  }
  return d;
}

inline PassThroughDiagram pass_through(const TensorWord& word, std::size_t i) {
  return pass_through(std::span<const CrystalElement>(word.factors()), i);
}

}  // namespace crystal
