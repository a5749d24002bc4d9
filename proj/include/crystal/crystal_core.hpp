#pragma once

/*
  Crystal elements of the antisymmetric (Column) and symmetric (Row)
  representations of sl_n, with the Kashiwara operators e_i, f_i for
  i = 0..n-1 and their action on tensor products.

  An element is a sorted list of letters in 1..n: strictly increasing for
  Column (k distinct dots in n boxes), weakly increasing for Row (k dots,
  repetition allowed). Index i in 1..n-1 moves a dot between boxes i and i+1;
  index 0 is the affine operator, moving a dot between box n and box 1.

  Tensor products follow the signature rule: factor j contributes
  epsilon_j "-" signs followed by phi_j "+" signs, a "+" cancels against the
  nearest uncancelled "-" to its right, f acts on the factor holding the
  leftmost surviving "+", e on the factor holding the rightmost surviving "-".
  For two factors this is exactly

      e(b1 x b2) = e b1 x b2   if phi(b1) >= eps(b2),  b1 x e b2 otherwise
      f(b1 x b2) = f b1 x b2   if phi(b1) >  eps(b2),  b1 x f b2 otherwise

  and the sign sequence makes the rule associative for any word length.
*/

#include <algorithm>
#include <compare>
#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace crystal {

enum class Flavor { Column, Row };

inline std::string_view to_string(Flavor f) noexcept { return f == Flavor::Column ? "column" : "row"; }

inline Flavor parse_flavor(std::string_view s) {
  if (s == "column" || s == "col") return Flavor::Column;
  if (s == "row") return Flavor::Row;
  throw std::invalid_argument("unknown flavor '" + std::string(s) + "' (expected column|row)");
}

/// Thrown when an enumeration would exceed a configured size cap.
class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Content vector: counts[j] is the number of occurrences of letter j+1.
struct WeightVec {
  std::vector<int> counts;

  int total() const noexcept {
    int s = 0;
    for (int c : counts) s += c;
    return s;
  }

  // <h_i, wt>: letter i minus letter i+1, read cyclically for i = 0.
  int pairing(int i) const {
    const int n = static_cast<int>(counts.size());
    const int lo = i == 0 ? n : i;
    const int hi = i == 0 ? 1 : i + 1;
    return counts[static_cast<std::size_t>(lo - 1)] - counts[static_cast<std::size_t>(hi - 1)];
  }

  auto operator<=>(const WeightVec&) const = default;
};

class CrystalElement {
 public:
  CrystalElement(Flavor flavor, int rank, std::vector<int> entries)
      : flavor_(flavor), rank_(rank), entries_(std::move(entries)) {
    if (rank_ < 2) throw std::domain_error("crystal element: rank must be at least 2");
    if (entries_.empty()) throw std::domain_error("crystal element: at least one dot required");
    for (std::size_t j = 0; j < entries_.size(); ++j) {
      const int x = entries_[j];
      if (x < 1 || x > rank_) throw std::domain_error("crystal element: letter out of range 1..n");
      if (j > 0) {
        const int prev = entries_[j - 1];
        if (flavor_ == Flavor::Column ? x <= prev : x < prev)
          throw std::domain_error(flavor_ == Flavor::Column
                                      ? "column element: letters must be strictly increasing"
                                      : "row element: letters must be weakly increasing");
      }
    }
  }

  Flavor flavor() const noexcept { return flavor_; }
  int rank() const noexcept { return rank_; }
  int size() const noexcept { return static_cast<int>(entries_.size()); }
  std::span<const int> entries() const noexcept { return entries_; }
  const std::vector<int>& entry_vector() const noexcept { return entries_; }

  int count(int letter) const noexcept {
    return static_cast<int>(std::count(entries_.begin(), entries_.end(), letter));
  }
  bool contains(int letter) const noexcept {
    return std::binary_search(entries_.begin(), entries_.end(), letter);
  }

  // Boxes touched by index i: f moves a dot from `lower_letter` to `upper_letter`.
  static int lower_letter(int i, int rank) noexcept { return i == 0 ? rank : i; }
  static int upper_letter(int i, int /*rank*/) noexcept { return i == 0 ? 1 : i + 1; }

  int phi(int i) const {
    check_index(i);
    const int lo = lower_letter(i, rank_), hi = upper_letter(i, rank_);
    if (flavor_ == Flavor::Row) return count(lo);
    return contains(lo) && !contains(hi) ? 1 : 0;
  }

  int epsilon(int i) const {
    check_index(i);
    const int lo = lower_letter(i, rank_), hi = upper_letter(i, rank_);
    if (flavor_ == Flavor::Row) return count(hi);
    return contains(hi) && !contains(lo) ? 1 : 0;
  }

  std::optional<CrystalElement> f(int i) const {
    if (phi(i) == 0) return std::nullopt;
    return moved(lower_letter(i, rank_), upper_letter(i, rank_));
  }

  std::optional<CrystalElement> e(int i) const {
    if (epsilon(i) == 0) return std::nullopt;
    return moved(upper_letter(i, rank_), lower_letter(i, rank_));
  }

  /// Letters concatenated, e.g. "134"; comma separated once letters exceed 9.
  std::string label() const {
    std::string s;
    for (std::size_t j = 0; j < entries_.size(); ++j) {
      if (j && rank_ > 9) s += ',';
      s += std::to_string(entries_[j]);
    }
    return s;
  }

  auto operator<=>(const CrystalElement&) const = default;

 private:
  void check_index(int i) const {
    if (i < 0 || i >= rank_) throw std::domain_error("Kashiwara index out of range 0..n-1");
  }

  CrystalElement moved(int from, int to) const {
    std::vector<int> out = entries_;
    *std::find(out.begin(), out.end(), from) = to;
    std::sort(out.begin(), out.end());
    return CrystalElement(flavor_, rank_, std::move(out));
  }

  Flavor flavor_;
  int rank_;
  std::vector<int> entries_;
};

class TensorWord {
 public:
  explicit TensorWord(std::vector<CrystalElement> factors) : factors_(std::move(factors)) {
    if (factors_.empty()) throw std::domain_error("tensor word: at least one factor required");
    for (const auto& b : factors_)
      if (b.flavor() != factors_.front().flavor() || b.rank() != factors_.front().rank())
        throw std::domain_error("tensor word: factors must share flavor and rank");
  }
  TensorWord(CrystalElement single) : factors_{std::move(single)} {}  // NOLINT(google-explicit-constructor)

  Flavor flavor() const noexcept { return factors_.front().flavor(); }
  int rank() const noexcept { return factors_.front().rank(); }
  std::size_t length() const noexcept { return factors_.size(); }
  const std::vector<CrystalElement>& factors() const noexcept { return factors_; }
  const CrystalElement& operator[](std::size_t j) const { return factors_.at(j); }

  std::vector<int> sizes() const {
    std::vector<int> s;
    s.reserve(factors_.size());
    for (const auto& b : factors_) s.push_back(b.size());
    return s;
  }

  TensorWord with_factor(std::size_t j, CrystalElement b) const {
    std::vector<CrystalElement> out = factors_;
    out.at(j) = std::move(b);
    return TensorWord(std::move(out));
  }

  /// Factor labels joined by the tensor sign, e.g. "123⊗14⊗2".
  std::string label() const {
    std::string s;
    for (std::size_t j = 0; j < factors_.size(); ++j) {
      if (j) s += "⊗";
      s += factors_[j].label();
    }
    return s;
  }

  auto operator<=>(const TensorWord&) const = default;

 private:
  std::vector<CrystalElement> factors_;
};

inline WeightVec weight_of(const CrystalElement& b) {
  WeightVec w{std::vector<int>(static_cast<std::size_t>(b.rank()), 0)};
  for (int x : b.entries()) ++w.counts[static_cast<std::size_t>(x - 1)];
  return w;
}

inline WeightVec weight_of(const TensorWord& word) {
  WeightVec w{std::vector<int>(static_cast<std::size_t>(word.rank()), 0)};
  for (const auto& b : word.factors())
    for (int x : b.entries()) ++w.counts[static_cast<std::size_t>(x - 1)];
  return w;
}

struct StringLengths {
  int epsilon = 0;
  int phi = 0;
  friend bool operator==(const StringLengths&, const StringLengths&) = default;
};

namespace detail {

// Reduced signature of a word for index i.
struct Signature {
  int epsilon = 0;              // surviving "-" signs
  int phi = 0;                  // surviving "+" signs
  std::ptrdiff_t e_factor = -1;  // factor holding the rightmost surviving "-"
  std::ptrdiff_t f_factor = -1;  // factor holding the leftmost surviving "+"
};

inline Signature reduce_signature(const TensorWord& w, int i) {
  Signature sig;
  // Stack of (factor, open "+" count) awaiting cancellation from the right.
  std::vector<std::pair<std::ptrdiff_t, int>> open;
  const auto& fs = w.factors();
  for (std::size_t j = 0; j < fs.size(); ++j) {
    int minus = fs[j].epsilon(i);
    while (minus > 0 && !open.empty()) {
      const int c = std::min(minus, open.back().second);
      minus -= c;
      open.back().second -= c;
      if (open.back().second == 0) open.pop_back();
    }
    if (minus > 0) {
      sig.epsilon += minus;
      sig.e_factor = static_cast<std::ptrdiff_t>(j);
    }
    if (const int plus = fs[j].phi(i); plus > 0) open.emplace_back(static_cast<std::ptrdiff_t>(j), plus);
  }
  for (const auto& [j, c] : open) sig.phi += c;
  if (!open.empty()) sig.f_factor = open.front().first;
  return sig;
}

}  // namespace detail

inline StringLengths string_lengths(const TensorWord& w, int i) {
  const auto sig = detail::reduce_signature(w, i);
  return {sig.epsilon, sig.phi};
}

/// f_i on a word; std::nullopt stands for the zero element.
inline std::optional<TensorWord> apply_f(const TensorWord& w, int i) {
  const auto sig = detail::reduce_signature(w, i);
  if (sig.f_factor < 0) return std::nullopt;
  const auto j = static_cast<std::size_t>(sig.f_factor);
  return w.with_factor(j, *w[j].f(i));
}

inline std::optional<TensorWord> apply_e(const TensorWord& w, int i) {
  const auto sig = detail::reduce_signature(w, i);
  if (sig.e_factor < 0) return std::nullopt;
  const auto j = static_cast<std::size_t>(sig.e_factor);
  return w.with_factor(j, *w[j].e(i));
}

/// Highest weight for the classical sl_n part: e_i kills w for i = 1..n-1.
inline bool is_highest(const TensorWord& w) {
  for (int i = 1; i < w.rank(); ++i)
    if (string_lengths(w, i).epsilon != 0) return false;
  return true;
}

namespace detail {

inline void basis_rec(Flavor flavor, int n, int k, int lo, std::vector<int>& cur,
                      std::vector<CrystalElement>& out) {
  if (static_cast<int>(cur.size()) == k) {
    out.emplace_back(flavor, n, cur);
    return;
  }
  for (int x = lo; x <= n; ++x) {
    cur.push_back(x);
    basis_rec(flavor, n, k, flavor == Flavor::Column ? x + 1 : x, cur, out);
    cur.pop_back();
  }
}

}  // namespace detail

/// All elements of B_{Lambda_k} (Column) or B_{k Lambda_1} (Row) for sl_n,
/// in lexicographic order of their letters.
inline std::vector<CrystalElement> enumerate_basis(Flavor flavor, int n, int k) {
  if (n < 2) throw std::domain_error("enumerate_basis: rank must be at least 2");
  if (k < 1 || (flavor == Flavor::Column && k > n))
    throw std::domain_error("enumerate_basis: size out of range");
  std::vector<CrystalElement> out;
  std::vector<int> cur;
  detail::basis_rec(flavor, n, k, 1, cur, out);
  return out;
}

/// Every word of the tensor product of bases with the given factor sizes,
/// lexicographic with the leftmost factor most significant.
inline std::vector<TensorWord> enumerate_words(Flavor flavor, int n, std::span<const int> sizes,
                                               std::size_t cap = static_cast<std::size_t>(-1)) {
  if (sizes.empty()) throw std::domain_error("enumerate_words: no factors");
  std::vector<std::vector<CrystalElement>> bases;
  std::size_t total = 1;
  for (int k : sizes) {
    bases.push_back(enumerate_basis(flavor, n, k));
    if (total > cap / bases.back().size())
      throw ResourceError("tensor product exceeds the node cap of " + std::to_string(cap));
    total *= bases.back().size();
  }
  std::vector<TensorWord> out;
  out.reserve(total);
  std::vector<std::size_t> idx(sizes.size(), 0);
  for (std::size_t t = 0; t < total; ++t) {
    std::vector<CrystalElement> fs;
    fs.reserve(sizes.size());
    for (std::size_t j = 0; j < sizes.size(); ++j) fs.push_back(bases[j][idx[j]]);
    out.emplace_back(std::move(fs));
    for (std::size_t j = sizes.size(); j-- > 0;) {
      if (++idx[j] < bases[j].size()) break;
      idx[j] = 0;
    }
  }
  return out;
}

/// Highest words (killed by e_1..e_{n-1}) with the given factor sizes and
/// letter content, built factor by factor from the left. A prefix of a highest
/// word is highest, and appending b keeps it highest exactly when
/// eps_i(b) <= phi_i(prefix) for i = 1..n-1.
inline std::vector<TensorWord> enumerate_highest_words(Flavor flavor, int n, std::span<const int> sizes,
                                                       const std::vector<int>& content) {
  if (sizes.empty()) throw std::domain_error("enumerate_highest_words: no factors");
  if (static_cast<int>(content.size()) != n) throw std::domain_error("enumerate_highest_words: content needs n entries");
  std::vector<std::vector<CrystalElement>> bases;
  for (int k : sizes) bases.push_back(enumerate_basis(flavor, n, k));
  std::vector<TensorWord> out;
  std::vector<CrystalElement> cur;
  std::vector<int> used(static_cast<std::size_t>(n), 0);
  std::vector<int> phi(static_cast<std::size_t>(n), 0);
  auto rec = [&](auto&& self) -> void {
    const std::size_t pos = cur.size();
    if (pos == sizes.size()) {
      if (used == content) out.emplace_back(cur);
      return;
    }
    for (const auto& b : bases[pos]) {
      bool ok = true;
      for (int a = 1; a <= n && ok; ++a)
        if (used[static_cast<std::size_t>(a - 1)] + b.count(a) > content[static_cast<std::size_t>(a - 1)]) ok = false;
      for (int i = 1; i < n && ok; ++i)
        if (b.epsilon(i) > phi[static_cast<std::size_t>(i)]) ok = false;
      if (!ok) continue;
      const auto saved = phi;
      for (int i = 1; i < n; ++i) phi[static_cast<std::size_t>(i)] += b.phi(i) - b.epsilon(i);
      for (int a = 1; a <= n; ++a) used[static_cast<std::size_t>(a - 1)] += b.count(a);
      cur.push_back(b);
      self(self);
      cur.pop_back();
      for (int a = 1; a <= n; ++a) used[static_cast<std::size_t>(a - 1)] -= b.count(a);
      phi = saved;
    }
  };
  rec(rec);
  return out;
}

struct CrystalArrow {
  std::size_t source;
  int color;
  std::size_t target;
  friend bool operator==(const CrystalArrow&, const CrystalArrow&) = default;
};

/// Full affine crystal graph (all f_i, i = 0..n-1) of a tensor product.
struct CrystalGraph {
  std::vector<TensorWord> nodes;
  std::vector<CrystalArrow> arrows;  // sorted by (source, color)

  std::size_t index_of(const TensorWord& w) const {
    auto it = std::lower_bound(nodes.begin(), nodes.end(), w);
    if (it == nodes.end() || *it != w) throw std::out_of_range("crystal graph: word not a node");
    return static_cast<std::size_t>(it - nodes.begin());
  }

  /// Number of connected components when arrows of the given colors are
  /// treated as undirected edges.
  std::size_t components(int min_color = 0) const {
    std::vector<std::size_t> parent(nodes.size());
    for (std::size_t v = 0; v < parent.size(); ++v) parent[v] = v;
    auto find = [&](std::size_t v) {
      while (parent[v] != v) v = parent[v] = parent[parent[v]];
      return v;
    };
    std::size_t count = nodes.size();
    for (const auto& a : arrows) {
      if (a.color < min_color) continue;
      auto r1 = find(a.source), r2 = find(a.target);
      if (r1 != r2) {
        parent[r1] = r2;
        --count;
      }
    }
    return count;
  }
};

inline CrystalGraph crystal_graph(Flavor flavor, int n, std::span<const int> sizes,
                                  std::size_t node_cap = 100000) {
  CrystalGraph g;
  g.nodes = enumerate_words(flavor, n, sizes, node_cap);  // already sorted
  for (std::size_t v = 0; v < g.nodes.size(); ++v)
    for (int i = 0; i < n; ++i)
      if (auto t = apply_f(g.nodes[v], i)) g.arrows.push_back({v, i, g.index_of(*t)});
  return g;
}

}  // namespace crystal
