#pragma once

// Property suites over bounded ranges. Each returns a CheckResult with the
// number of instances examined and the first failure found.

#include <algorithm>
#include <array>
#include <chrono>
#include <cstdint>
#include <functional>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "crystal/crystal_core.hpp"
#include "crystal/kostka.hpp"
#include "crystal/paths.hpp"
#include "crystal/rmatrix.hpp"
#include "crystal/symfunc.hpp"
#include "crystal/tableau.hpp"

namespace crystal::verify {

struct CheckResult {
  std::string name;
  bool passed = true;
  std::uint64_t cases = 0;
  std::uint64_t failures = 0;
  std::string first_failure;
  double seconds = 0;

  void fail(const std::string& what) {
    passed = false;
    if (failures++ == 0) first_failure = what;
  }
};

struct Bounds {
  int max_size = 8;       // |mu| for Kostka, index via energies, duality, bijection
  int max_skew = 6;       // |lambda/nu|
  int max_skew_outer = 8;  // |lambda| for skew shapes
  int max_rank = 4;        // crystal and R-matrix checks
  int max_factor = 3;      // factor sizes k, l
  int random_orders = 100;
  int random_triples = 1000;
  int triple_rank = 5;
  int triple_size = 4;
  int sym_size = 6;
  int sym_vars = 4;
  int path_level = 3;  // A_N range
  int path_rank = 4;
  int path_N = 3;
  std::uint64_t seed = 20240611;
};

namespace detail {

template <class F>
CheckResult timed(std::string name, F&& body) {
  CheckResult r;
  r.name = std::move(name);
  const auto t0 = std::chrono::steady_clock::now();
  body(r);
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return r;
}

// Every (flavor, n, k, l) with n <= max_rank, k, l <= max_factor that names
// actual crystals.
struct PairKind {
  Flavor flavor;
  int n, k, l;
};

inline std::vector<PairKind> pair_kinds(const Bounds& b, bool only_k_ge_l = false) {
  std::vector<PairKind> out;
  for (Flavor f : {Flavor::Column, Flavor::Row})
    for (int n = 2; n <= b.max_rank; ++n)
      for (int k = 1; k <= b.max_factor; ++k)
        for (int l = 1; l <= b.max_factor; ++l) {
          if (only_k_ge_l && k < l) continue;
          if (f == Flavor::Column && (k >= n || l >= n)) continue;
          out.push_back({f, n, k, l});
        }
  return out;
}

inline std::string kind_label(const PairKind& p) {
  return std::string(to_string(p.flavor)) + " n=" + std::to_string(p.n) + " k=" + std::to_string(p.k) +
         " l=" + std::to_string(p.l);
}

inline std::vector<TensorWord> pair_words(const PairKind& p) {
  const int sizes[] = {p.k, p.l};
  return enumerate_words(p.flavor, p.n, sizes);
}

inline TensorWord swap_image(const TensorWord& w) {
  const RResult r = r_map(w[0], w[1]);
  return TensorWord({r.out_left, r.out_right});
}

// Kashiwara string lengths by repeated application.
inline int f_string(TensorWord w, int i) {
  int m = 0;
  while (auto next = apply_f(w, i)) {
    w = *next;
    ++m;
  }
  return m;
}
inline int e_string(TensorWord w, int i) {
  int m = 0;
  while (auto next = apply_e(w, i)) {
    w = *next;
    ++m;
  }
  return m;
}

inline int pairing(const WeightVec& wt, int i, int n) {
  const int lo = i == 0 ? n : i, hi = i == 0 ? 1 : i + 1;
  return wt.counts[static_cast<std::size_t>(lo - 1)] - wt.counts[static_cast<std::size_t>(hi - 1)];
}

inline WeightVec shifted_weight(WeightVec wt, int i, int n, int sign) {
  const int lo = i == 0 ? n : i, hi = i == 0 ? 1 : i + 1;
  wt.counts[static_cast<std::size_t>(lo - 1)] += sign;
  wt.counts[static_cast<std::size_t>(hi - 1)] -= sign;
  return wt;
}

// Skew shapes lambda/nu with nu non-empty, |lambda| <= max_outer and
// 1 <= |lambda/nu| <= max_skew.
inline std::vector<SkewShape> skew_shapes(int max_outer, int max_skew) {
  std::vector<SkewShape> out;
  for (int m = 2; m <= max_outer; ++m)
    for (const auto& lam : partitions_of(m))
      for (int s = std::max(1, m - max_skew); s < m; ++s)
        for (const auto& nu : partitions_of(s))
          if (lam.contains(nu)) out.emplace_back(lam, nu);
  return out;
}

}  // namespace detail

/// Crystal axioms on single elements and on two-factor words, all colors.
inline CheckResult crystal_axioms(const Bounds& b) {
  return detail::timed("crystal axioms", [&](CheckResult& r) {
    for (const auto& kind : detail::pair_kinds(b)) {
      std::vector<TensorWord> words;
      for (const auto& x : enumerate_basis(kind.flavor, kind.n, kind.k)) words.emplace_back(x);
      for (auto& w : detail::pair_words(kind)) words.push_back(std::move(w));
      for (const auto& w : words)
        for (int i = 0; i < kind.n; ++i) {
          ++r.cases;
          const auto where = w.label() + " i=" + std::to_string(i) + " (" + detail::kind_label(kind) + ")";
          const auto wt = weight_of(w);
          const auto sl = string_lengths(w, i);
          const auto e = apply_e(w, i);
          const auto f = apply_f(w, i);
          if (e && weight_of(*e).counts != detail::shifted_weight(wt, i, kind.n, +1).counts)
            r.fail("axiom 1 at " + where);
          if (f && weight_of(*f).counts != detail::shifted_weight(wt, i, kind.n, -1).counts)
            r.fail("axiom 2 at " + where);
          if (sl.phi != detail::f_string(w, i) || sl.epsilon != detail::e_string(w, i)) r.fail("axiom 3 at " + where);
          if (sl.phi - sl.epsilon != detail::pairing(wt, i, kind.n)) r.fail("axiom 4 at " + where);
          // axiom 5: the null element is absorbing, checked through the optional chain
          const auto ee = e ? apply_e(*e, i) : std::nullopt;
          if (!e && ee) r.fail("axiom 5 at " + where);
          if (f) {
            const auto back = apply_e(*f, i);
            if (!back || *back != w) r.fail("axiom 6 (e f) at " + where);
          }
          if (e) {
            const auto back = apply_f(*e, i);
            if (!back || *back != w) r.fail("axiom 6 (f e) at " + where);
          }
        }
    }
  });
}

/// The R-matrix commutes with every e_i and f_i, i = 0..n-1.
inline CheckResult rmatrix_commutation(const Bounds& b) {
  return detail::timed("R-matrix commutes with e_i, f_i", [&](CheckResult& r) {
    for (const auto& kind : detail::pair_kinds(b))
      for (const auto& w : detail::pair_words(kind)) {
        const TensorWord img = detail::swap_image(w);
        for (int i = 0; i < kind.n; ++i) {
          ++r.cases;
          const auto fw = apply_f(w, i), fi = apply_f(img, i);
          if (fw.has_value() != fi.has_value() || (fw && detail::swap_image(*fw) != *fi))
            r.fail("f_" + std::to_string(i) + " at " + w.label() + " (" + detail::kind_label(kind) + ")");
          const auto ew = apply_e(w, i), ei = apply_e(img, i);
          if (ew.has_value() != ei.has_value() || (ew && detail::swap_image(*ew) != *ei))
            r.fail("e_" + std::to_string(i) + " at " + w.label() + " (" + detail::kind_label(kind) + ")");
        }
      }
  });
}

/// R(R(b1 x b2)) = b1 x b2, both directions carrying the same energy.
inline CheckResult rmatrix_involution(const Bounds& b) {
  return detail::timed("R-matrix involution", [&](CheckResult& r) {
    for (const auto& kind : detail::pair_kinds(b))
      for (const auto& w : detail::pair_words(kind)) {
        ++r.cases;
        const RResult a = r_map(w[0], w[1]);
        const RResult back = r_map(a.out_left, a.out_right);
        if (back.out_left != w[0] || back.out_right != w[1] || back.energy != a.energy)
          r.fail(w.label() + " (" + detail::kind_label(kind) + ")");
      }
  });
}

/// Energy recursion along e_0 (+1 / -1 / 0 by where e_0 acts on both sides),
/// constancy along e_i for i != 0, and the normalization point.
inline CheckResult energy_recursion(const Bounds& b) {
  return detail::timed("energy recursion and normalization", [&](CheckResult& r) {
    for (const auto& kind : detail::pair_kinds(b)) {
      const auto [anchor, h0] = energy_anchor(kind.flavor, kind.n, kind.k, kind.l);
      ++r.cases;
      if (r_map(anchor[0], anchor[1]).energy != h0) r.fail("normalization at " + anchor.label());
      for (const auto& w : detail::pair_words(kind)) {
        const RResult here = r_map(w[0], w[1]);
        const TensorWord img({here.out_left, here.out_right});
        for (int i = 0; i < kind.n; ++i) {
          const auto e = apply_e(w, i);
          if (!e) continue;
          ++r.cases;
          const int want = here.energy + crystal::detail::energy_step(w, img, i);
          if (r_map((*e)[0], (*e)[1]).energy != want)
            r.fail("e_" + std::to_string(i) + " at " + w.label() + " (" + detail::kind_label(kind) + ")");
        }
      }
    }
  });
}

/// Pairing rule with random line orders gives the same image and energy.
inline CheckResult order_independence(const Bounds& b) {
  return detail::timed("line order independence", [&](CheckResult& r) {
    std::mt19937_64 rng(b.seed);
    for (const auto& kind : detail::pair_kinds(b, true))
      for (const auto& w : detail::pair_words(kind)) {
        const RResult ref = r_map_rule(w[0], w[1]);
        std::vector<std::size_t> order(static_cast<std::size_t>(kind.l));
        std::iota(order.begin(), order.end(), 0);
        for (int t = 0; t < b.random_orders; ++t) {
          std::shuffle(order.begin(), order.end(), rng);
          ++r.cases;
          const RResult got = r_map_rule(w[0], w[1], order);
          if (got.out_left != ref.out_left || got.out_right != ref.out_right || got.energy != ref.energy)
            r.fail(w.label() + " (" + detail::kind_label(kind) + ")");
        }
      }
  });
}

/// Pairing rule against the propagated energy table, k >= l.
inline CheckResult rule_vs_table(const Bounds& b) {
  return detail::timed("pairing rule vs propagated table", [&](CheckResult& r) {
    for (const auto& kind : detail::pair_kinds(b, true)) {
      const EnergyTable table(kind.flavor, kind.n, kind.k, kind.l);
      for (const auto& e : table.entries()) {
        ++r.cases;
        const RResult rule = r_map_rule(e.b1, e.b2);
        if (rule.energy != e.result.energy || rule.out_left != e.result.out_left ||
            rule.out_right != e.result.out_right)
          r.fail(e.b1.label() + "⊗" + e.b2.label() + " (" + detail::kind_label(kind) + ")");
      }
    }
  });
}

/// Tableaux against highest words: the word map is injective, lands on
/// highest words of the right weight, hits all of them (enumerated
/// independently), and word_to_tableau inverts it.
inline CheckResult tableau_word_bijection(const Bounds& b) {
  return detail::timed("tableaux <-> highest words", [&](CheckResult& r) {
    for (int m = 1; m <= b.max_size; ++m)
      for (const auto& lam : partitions_of(m))
        for (const auto& mu : partitions_of(m))
          for (Flavor f : {Flavor::Column, Flavor::Row}) {
            const auto tabs = enumerate_tableaux(SkewShape(lam), mu);
            const int n = minimal_rank(f, lam);
            if (f == Flavor::Column && mu[0] > n) {
              // no column of that height fits, and no tableau either
              ++r.cases;
              if (!tabs.empty()) r.fail("tableaux without words: " + lam.to_string() + " " + mu.to_string());
              continue;
            }
            const Partition target = f == Flavor::Row ? lam : lam.conjugate();
            std::vector<int> content(static_cast<std::size_t>(n));
            for (int a = 0; a < n; ++a) content[static_cast<std::size_t>(a)] = target[a];
            auto highest = enumerate_highest_words(f, n, mu.parts(), content);
            std::sort(highest.begin(), highest.end());
            ++r.cases;
            const std::string where = lam.to_string() + " " + mu.to_string() + " " + std::string(to_string(f));
            std::vector<TensorWord> images;
            for (const auto& t : tabs) {
              auto w = tableau_to_word(t, f, n);
              if (!is_highest(w)) r.fail("not highest: " + where);
              if (word_to_tableau(w) != t) r.fail("round trip: " + where);
              images.push_back(std::move(w));
            }
            std::sort(images.begin(), images.end());
            if (std::adjacent_find(images.begin(), images.end()) != images.end()) r.fail("not injective: " + where);
            if (images != highest) r.fail("image differs from highest words: " + where);
          }
  });
}

/// Per-component index from energies equals the charge index, both flavors.
inline CheckResult index_theorem(const Bounds& b) {
  return detail::timed("index via energies = charge index", [&](CheckResult& r) {
    for (int m = 1; m <= b.max_size; ++m)
      for (const auto& lam : partitions_of(m))
        for (const auto& mu : partitions_of(m))
          for (const auto& t : enumerate_tableaux(SkewShape(lam), mu)) {
            const auto want = index_vector(t);
            for (Flavor f : {Flavor::Column, Flavor::Row}) {
              ++r.cases;
              const auto w = tableau_to_word(t, f, minimal_rank(f, lam));
              for (std::size_t i = 1; i <= w.length(); ++i)
                if (index_via_energy(w, i) != want[i - 1]) {
                  r.fail(std::string(to_string(f)) + " component " + std::to_string(i) + " of\n" + t.to_string());
                  break;
                }
            }
          }
  });
}

namespace detail {

inline void compare_methods(CheckResult& r, const SkewShape& shape, const Partition& mu) {
  ++r.cases;
  const auto c = kostka_poly(shape, mu, KostkaMethod::Charge);
  const auto col = kostka_poly(shape, mu, KostkaMethod::EnergyColumn);
  const auto row = kostka_poly(shape, mu, KostkaMethod::EnergyRow);
  if (!(c == col) || !(c == row))
    r.fail(shape.to_string() + " " + mu.to_string() + ": charge " + c.to_string() + ", energy-col " +
           col.to_string() + ", energy-row " + row.to_string());
}

}  // namespace detail

/// The three Kostka routes agree, straight and skew.
inline CheckResult kostka_agreement(const Bounds& b) {
  return detail::timed("Kostka three-way agreement", [&](CheckResult& r) {
    for (int m = 1; m <= b.max_size; ++m)
      for (const auto& lam : partitions_of(m))
        for (const auto& mu : partitions_of(m)) detail::compare_methods(r, SkewShape(lam), mu);
    for (const auto& shape : detail::skew_shapes(b.max_skew_outer, b.max_skew))
      for (const auto& mu : partitions_of(shape.size())) detail::compare_methods(r, shape, mu);
  });
}

/// K(1) equals the number of tableaux, and K has nonnegative coefficients.
inline CheckResult q_one(const Bounds& b) {
  return detail::timed("q = 1 gives tableau counts", [&](CheckResult& r) {
    auto one = [&](const SkewShape& shape, const Partition& mu) {
      ++r.cases;
      const auto k = kostka_poly(shape, mu, KostkaMethod::Charge);
      if (k.at_one() != kostka_number(shape, mu) || !k.has_nonnegative_coefficients())
        r.fail(shape.to_string() + " " + mu.to_string());
      if (shape.is_straight() && k.min_degree() && *k.min_degree() < 0) r.fail("negative exponent " + shape.to_string());
    };
    for (int m = 1; m <= b.max_size; ++m)
      for (const auto& lam : partitions_of(m))
        for (const auto& mu : partitions_of(m)) one(SkewShape(lam), mu);
    for (const auto& shape : detail::skew_shapes(b.max_skew_outer, b.max_skew))
      for (const auto& mu : partitions_of(shape.size())) one(shape, mu);
  });
}

/// Column and row energies cancel position by position along pass-throughs.
inline CheckResult energy_duality(const Bounds& b) {
  return detail::timed("column + row energies vanish", [&](CheckResult& r) {
    for (int m = 1; m <= b.max_size; ++m)
      for (const auto& lam : partitions_of(m))
        for (const auto& mu : partitions_of(m))
          for (const auto& t : enumerate_tableaux(SkewShape(lam), mu)) {
            const auto wc = tableau_to_word(t, Flavor::Column, minimal_rank(Flavor::Column, lam));
            const auto wr = tableau_to_word(t, Flavor::Row, minimal_rank(Flavor::Row, lam));
            for (std::size_t i = 2; i <= wc.length(); ++i) {
              ++r.cases;
              const auto dc = pass_through(wc, i), dr = pass_through(wr, i);
              for (std::size_t j = 0; j < dc.energies.size(); ++j)
                if (dc.energies[j] + dr.energies[j] != 0) {
                  r.fail("component " + std::to_string(i) + ", position " + std::to_string(j + 1) + " of\n" +
                         t.to_string());
                  break;
                }
            }
          }
  });
}

/// Local index: ind(b) - ind(b') = -H(a2, b) on random triples.
inline CheckResult local_index_exchange(const Bounds& b) {
  return detail::timed("local index exchange", [&](CheckResult& r) {
    std::mt19937_64 rng(b.seed + 1);
    auto pick = [&](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };
    for (int t = 0; t < b.random_triples; ++t) {
      const int n = pick(2, b.triple_rank);
      const int top = std::min(b.triple_size, n - 1);
      int k2 = pick(1, top), k1 = pick(1, top), k0 = pick(1, top);
      std::array<int, 3> ks{k2, k1, k0};
      std::sort(ks.begin(), ks.end(), std::greater<>());
      auto random_column = [&](int k) {
        std::vector<int> letters(static_cast<std::size_t>(n));
        std::iota(letters.begin(), letters.end(), 1);
        std::shuffle(letters.begin(), letters.end(), rng);
        letters.resize(static_cast<std::size_t>(k));
        std::sort(letters.begin(), letters.end());
        return CrystalElement(Flavor::Column, n, letters);
      };
      const auto a1 = random_column(ks[0]), a2 = random_column(ks[1]), bb = random_column(ks[2]);
      std::vector<int> order = a1.entry_vector();
      std::shuffle(order.begin(), order.end(), rng);
      const RResult swap = r_map(a2, bb);
      const CrystalElement chain[] = {a2, bb};
      const int lhs = local_index(a1, order, chain).total -
                      local_index(a1, order, std::span<const CrystalElement>(&swap.out_left, 1)).total;
      ++r.cases;
      if (lhs != -swap.energy)
        r.fail(a1.label() + "⊗" + a2.label() + "⊗" + bb.label() + " n=" + std::to_string(n));
    }
  });
}

/// With the bottom-up order on the first factor, chained local indices of a
/// column word reproduce the charge index; and for a1 = [1..k] the local
/// index of b is -H(a1, b).
inline CheckResult local_index_consistency(const Bounds& b) {
  return detail::timed("local index = charge index", [&](CheckResult& r) {
    for (int m = 1; m <= b.max_size; ++m)
      for (const auto& lam : partitions_of(m))
        for (const auto& mu : partitions_of(m))
          for (const auto& t : enumerate_tableaux(SkewShape(lam), mu)) {
            ++r.cases;
            const auto want = index_vector(t);
            const auto w = tableau_to_word(t, Flavor::Column, minimal_rank(Flavor::Column, lam));
            const auto order = bottom_up_order(w[0]);
            std::span<const CrystalElement> fs(w.factors());
            if (want[0] != 0) r.fail("ind(1) != 0");
            for (std::size_t i = 2; i <= w.length(); ++i)
              if (local_index(w[0], order, fs.subspan(1, i - 1)).total != want[i - 1]) {
                r.fail("component " + std::to_string(i) + " of\n" + t.to_string());
                break;
              }
          }
    for (int n = 2; n <= b.triple_rank; ++n)
      for (int k = 1; k < n; ++k) {
        std::vector<int> top(static_cast<std::size_t>(k));
        std::iota(top.begin(), top.end(), 1);
        const CrystalElement a1(Flavor::Column, n, top);
        for (int k2 = 1; k2 <= k; ++k2)
          for (const auto& x : enumerate_basis(Flavor::Column, n, k2)) {
            ++r.cases;
            if (local_index(a1, bottom_up_order(a1), std::span<const CrystalElement>(&x, 1)).total !=
                -r_map(a1, x).energy)
              r.fail("first factor " + a1.label() + ", second " + x.label());
          }
      }
  });
}

/// A_N closed form against ground state energies.
inline CheckResult a_norm_check(const Bounds& b) {
  return detail::timed("A_N closed form", [&](CheckResult& r) {
    for (int k = 1; k <= b.path_level; ++k)
      for (int n = 2; n <= b.path_rank; ++n) {
        ++r.cases;
        try {
          check_ground_steps(n, k);
        } catch (const std::logic_error& e) {
          r.fail(e.what());
        }
        for (int i = 0; i < n; ++i)
          for (int N = 0; N <= b.path_N; ++N) {
            ++r.cases;
            const PathSpec spec{Flavor::Row, n, k, i, N};
            const long long closed = static_cast<long long>(k) * n * N * (N - 1) / 2 + static_cast<long long>(k) * N * i;
            if (a_norm_energy_sum(spec) != closed)
              r.fail("n=" + std::to_string(n) + " k=" + std::to_string(k) + " i=" + std::to_string(i) +
                     " N=" + std::to_string(N));
          }
      }
  });
}

namespace detail {

// Weights used for the path checks: |lambda| <= max_weight, compatible with the spec.
inline std::vector<Partition> path_weights(const PathSpec& spec, int max_weight) {
  std::vector<Partition> out;
  for (int m = 0; m <= max_weight; ++m)
    for (const auto& lam : partitions_of(m)) {
      try {
        if (lambda_N(lam, spec)) out.push_back(lam);
      } catch (const std::domain_error&) {
      }
    }
  return out;
}

inline std::vector<PathSpec> desk_specs(int max_N) {
  std::vector<PathSpec> out;
  for (int n = 2; n <= 3; ++n)
    for (int k = 1; k <= 2; ++k) {
      for (int i = 0; i < n; ++i)
        for (int N = 0; N <= max_N; ++N) out.push_back({Flavor::Row, n, k, i, N});
      if (k < n)
        for (int N = 0; N <= max_N; ++N) out.push_back({Flavor::Column, n, k, 0, N});
    }
  return out;
}

}  // namespace detail

/// One-dimensional sums over highest paths equal the normalized Kostka
/// polynomials (energy route of the path flavor).
inline CheckResult one_dcs_identity(const Bounds& b) {
  return detail::timed("1D sums = normalized Kostka", [&](CheckResult& r) {
    for (const auto& spec : detail::desk_specs(b.path_N))
      for (const auto& lam : detail::path_weights(spec, 4)) {
        ++r.cases;
        const auto lhs = one_dcs(lam, spec);
        const auto method = spec.flavor == Flavor::Row ? KostkaMethod::EnergyRow : KostkaMethod::EnergyColumn;
        const auto rhs = normalized_kostka(lam, spec, method);
        if (!(lhs == rhs))
          r.fail(std::string(to_string(spec.flavor)) + " n=" + std::to_string(spec.rank) + " k=" +
                 std::to_string(spec.level) + " i=" + std::to_string(spec.residue) + " N=" + std::to_string(spec.N) +
                 " " + lam.to_string() + ": " + lhs.to_string() + " vs " + rhs.to_string());
      }
  });
}

/// Stabilization in N: prepending ground state steps embeds the highest paths
/// of N into those of N + 1 with the same grading, so every coefficient is
/// weakly increasing in N; the measured agreement bound is >= 0 and weakly
/// increasing.
inline CheckResult stabilization(const Bounds& b) {
  return detail::timed("stabilization in N", [&](CheckResult& r) {
    for (const auto& spec0 : detail::desk_specs(0)) {
      for (const auto& lam : detail::path_weights(PathSpec{spec0.flavor, spec0.rank, spec0.level, spec0.residue, 1}, 4)) {
        int prev_bound = -1;
        std::optional<LaurentPoly> prev;
        std::vector<std::int64_t> prev_coeffs;
        for (int N = 1; N <= b.path_N; ++N) {
          PathSpec spec = spec0;
          spec.N = N;
          const auto content = path_content(lam, spec);
          if (!content) continue;
          const auto cur = one_dcs(lam, spec);
          const std::string where = std::string(to_string(spec.flavor)) + " n=" + std::to_string(spec.rank) +
                                    " k=" + std::to_string(spec.level) + " i=" + std::to_string(spec.residue) +
                                    " " + lam.to_string() + " N=" + std::to_string(N);
          // embedding of the previous N
          PathSpec prev_spec = spec;
          prev_spec.N = N - 1;
          if (const auto pc = path_content(lam, prev_spec); pc && prev_spec.length() > 0) {
            for (const auto& w : highest_paths(prev_spec, *pc)) {
              ++r.cases;
              std::vector<CrystalElement> longer;
              for (int j = spec.length(); j > prev_spec.length(); --j) longer.push_back(ground_state_factor(spec, j));
              longer.insert(longer.end(), w.factors().begin(), w.factors().end());
              const TensorWord lw(longer);
              if (!is_highest(lw) || omega_N(lw, spec) != omega_N(w, prev_spec)) r.fail("embedding at " + where);
            }
          }
          if (prev) {
            ++r.cases;
            for (auto [e, c] : prev->coefficients())
              if (cur.coefficient(e) < c) r.fail("coefficient decreased at " + where);
            const int deg = std::max(cur.max_degree().value_or(0), prev->max_degree().value_or(0));
            std::vector<std::int64_t> a(static_cast<std::size_t>(deg) + 1), c(static_cast<std::size_t>(deg) + 1);
            for (int d = 0; d <= deg; ++d) {
              a[static_cast<std::size_t>(d)] = prev->coefficient(d);
              c[static_cast<std::size_t>(d)] = cur.coefficient(d);
            }
            const int bound = agreement_bound(a, c);
            if (bound < 0 || bound < prev_bound) r.fail("stability bound " + std::to_string(bound) + " at " + where);
            prev_bound = bound;
          }
          if (cur.min_degree() && *cur.min_degree() < 0) r.fail("negative grading at " + where);
          prev = cur;
        }
      }
    }
  });
}

/// Level one: rows at weight lambda' against k-columns at lambda.
inline CheckResult level_one(const Bounds& b) {
  return detail::timed("level one rows vs columns", [&](CheckResult& r) {
    for (int n = 2; n <= 3; ++n)
      for (int k = 1; k < n; ++k)
        for (int m = n; m <= 2 * n; m += n)
          for (const auto& lam : partitions_of(m)) {
            if (lam[0] > n) continue;
            ++r.cases;
            const auto c = level_one_crosscheck(lam, n, k, b.path_N, 8);
            if (!c.consistent)
              r.fail("n=" + std::to_string(n) + " k=" + std::to_string(k) + " " + lam.to_string());
          }
  });
}

/// Symmetric function identities with the default q-points.
inline CheckResult symmetric_functions(const Bounds& b) {
  return detail::timed("symmetric function identities", [&](CheckResult& r) {
    for (int m = 1; m <= b.sym_size; ++m)
      for (int n = 1; n <= b.sym_vars; ++n)
        for (const auto& c : check_identities(m, n, default_qpoints(m, n))) {
          ++r.cases;
          if (!c.ok)
            r.fail(c.identity + " " + c.lambda.to_string() + " " + c.mu.to_string() + " n=" + std::to_string(n) +
                   ": " + c.detail);
        }
  });
}

/// Kostka polynomials by energies do not depend on the rank used.
inline CheckResult rank_invariance(const Bounds& b) {
  return detail::timed("energy routes independent of rank", [&](CheckResult& r) {
    for (int m = 1; m <= std::min(b.max_size, 6); ++m)
      for (const auto& lam : partitions_of(m))
        for (const auto& mu : partitions_of(m))
          for (KostkaMethod method : {KostkaMethod::EnergyColumn, KostkaMethod::EnergyRow}) {
            const Flavor f = method == KostkaMethod::EnergyColumn ? Flavor::Column : Flavor::Row;
            const int n0 = minimal_rank(f, lam);
            const auto base = kostka_poly(lam, mu, method, n0);
            for (int n = n0 + 1; n <= n0 + 2; ++n) {
              ++r.cases;
              if (!(kostka_poly(lam, mu, method, n) == base))
                r.fail(lam.to_string() + " " + mu.to_string() + " " + std::string(to_string(method)) + " n=" +
                       std::to_string(n));
            }
          }
  });
}

struct Suite {
  std::string key;
  std::function<CheckResult(const Bounds&)> run;
};

inline std::vector<Suite> all_suites() {
  return {{"axioms", crystal_axioms},
          {"commutation", rmatrix_commutation},
          {"involution", rmatrix_involution},
          {"energy", energy_recursion},
          {"order", order_independence},
          {"rule-table", rule_vs_table},
          {"bijection", tableau_word_bijection},
          {"index", index_theorem},
          {"kostka", kostka_agreement},
          {"q-one", q_one},
          {"duality", energy_duality},
          {"local-exchange", local_index_exchange},
          {"local-consistency", local_index_consistency},
          {"a-norm", a_norm_check},
          {"one-dcs", one_dcs_identity},
          {"stabilization", stabilization},
          {"level-one", level_one},
          {"symfunc", symmetric_functions},
          {"rank", rank_invariance}};
}

}  // namespace crystal::verify
