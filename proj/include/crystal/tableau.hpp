#pragma once

/*
  Semistandard (skew) tableaux, the charge statistic and its per-letter index,
  the tableau <-> highest word correspondence, and the local index of a chain
  of column elements.

  Charge. Cells are read row by row from the top, right to left inside a row.
  In each round letters 1, 2, ..., m are picked: the first 1 in reading order,
  then the next 2 after it (cyclically), and so on. Every time the scan passes
  the end of the reading and restarts from the top the winding count of the
  round goes up by one; the suffix of a picked letter is the winding count at
  the moment it is picked. Picked cells are removed and the next round starts.
  ind(j) sums the suffixes of letter j; the charge is the sum of all indices.
  This is the charge of the row reading word, so skew tableaux are handled by
  the same procedure.
*/

#include <algorithm>
#include <cstddef>
#include <optional>
#include <span>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "crystal/crystal_core.hpp"
#include "crystal/partition.hpp"

namespace crystal {

class Tableau {
 public:
  /// `rows[r]` lists the entries of the skew part of row r, left to right.
  Tableau(SkewShape shape, std::vector<std::vector<int>> rows)
      : shape_(std::move(shape)), rows_(std::move(rows)) {
    if (static_cast<int>(rows_.size()) != shape_.rows())
      throw std::domain_error("tableau: number of rows does not match the shape");
    for (int r = 0; r < shape_.rows(); ++r) {
      const auto& row = rows_[static_cast<std::size_t>(r)];
      if (static_cast<int>(row.size()) != shape_.row_end(r) - shape_.row_begin(r))
        throw std::domain_error("tableau: row length does not match the shape");
      for (int c = shape_.row_begin(r); c < shape_.row_end(r); ++c) {
        const int v = value(r, c);
        if (v < 1) throw std::domain_error("tableau: entries must be positive");
        if (c > shape_.row_begin(r) && value(r, c - 1) > v)
          throw std::domain_error("tableau: rows must weakly increase");
        if (r > 0 && c >= shape_.row_begin(r - 1) && c < shape_.row_end(r - 1) && value(r - 1, c) >= v)
          throw std::domain_error("tableau: columns must strictly increase");
      }
    }
  }

  const SkewShape& shape() const noexcept { return shape_; }
  const std::vector<std::vector<int>>& rows() const noexcept { return rows_; }

  // Entry at absolute (row, column), both 0-based; must lie in the skew part.
  int value(int r, int c) const {
    return rows_.at(static_cast<std::size_t>(r)).at(static_cast<std::size_t>(c - shape_.row_begin(r)));
  }

  int max_value() const noexcept {
    int m = 0;
    for (const auto& row : rows_)
      for (int v : row) m = std::max(m, v);
    return m;
  }

  /// content[j] = number of cells holding j+1.
  std::vector<int> content() const {
    std::vector<int> c(static_cast<std::size_t>(max_value()), 0);
    for (const auto& row : rows_)
      for (int v : row) ++c[static_cast<std::size_t>(v - 1)];
    return c;
  }

  std::string to_string() const {
    std::string s;
    for (int r = 0; r < shape_.rows(); ++r) {
      if (r) s += '\n';
      for (int c = 0; c < shape_.row_end(r); ++c) {
        if (c) s += ' ';
        s += c < shape_.row_begin(r) ? "." : std::to_string(value(r, c));
      }
    }
    return s;
  }

  auto operator<=>(const Tableau&) const = default;

 private:
  SkewShape shape_;
  std::vector<std::vector<int>> rows_;
};

namespace detail {

inline void tableaux_rec(const SkewShape& shape, const std::vector<int>& mu, std::size_t value,
                         std::vector<int>& cur, std::vector<std::vector<int>>& rows,
                         std::vector<Tableau>& out) {
  if (value == mu.size()) {
    out.emplace_back(shape, rows);
    return;
  }
  // Choose a horizontal strip of size mu[value] on top of `cur`, row by row.
  const std::vector<int> before = cur;
  auto place = [&](auto&& self, int r, int remaining) -> void {
    if (r == shape.rows()) {
      if (remaining == 0) tableaux_rec(shape, mu, value + 1, cur, rows, out);
      return;
    }
    const int lo = before[static_cast<std::size_t>(r)];
    int hi = shape.row_end(r);
    if (r > 0) hi = std::min(hi, before[static_cast<std::size_t>(r - 1)]);
    hi = std::min(hi, lo + remaining);
    for (int len = hi; len >= lo; --len) {
      const int add = len - lo;
      auto& row = rows[static_cast<std::size_t>(r)];
      row.insert(row.end(), static_cast<std::size_t>(add), static_cast<int>(value) + 1);
      cur[static_cast<std::size_t>(r)] = len;
      self(self, r + 1, remaining - add);
      row.resize(row.size() - static_cast<std::size_t>(add));
      cur[static_cast<std::size_t>(r)] = lo;
    }
  };
  place(place, 0, mu[value]);
}

}  // namespace detail

/// All semistandard fillings of `shape` with content `mu`, in a fixed order.
inline std::vector<Tableau> enumerate_tableaux(const SkewShape& shape, const Partition& mu) {
  if (shape.size() != mu.size())
    throw std::domain_error("enumerate_tableaux: shape size " + std::to_string(shape.size()) +
                            " differs from weight size " + std::to_string(mu.size()));
  std::vector<Tableau> out;
  std::vector<int> cur(static_cast<std::size_t>(shape.rows()));
  for (int r = 0; r < shape.rows(); ++r) cur[static_cast<std::size_t>(r)] = shape.row_begin(r);
  std::vector<std::vector<int>> rows(static_cast<std::size_t>(shape.rows()));
  detail::tableaux_rec(shape, mu.parts(), 0, cur, rows, out);
  return out;
}

/// Cells picked during the charge computation, round by round.
struct ExtractionRecord {
  struct Pick {
    int value;
    int row;  // 0-based
    int col;  // 0-based
    int suffix;
    friend bool operator==(const Pick&, const Pick&) = default;
  };
  std::vector<std::vector<Pick>> rounds;

  std::vector<std::vector<int>> suffixes() const {
    std::vector<std::vector<int>> out;
    for (const auto& round : rounds) {
      out.emplace_back();
      for (const auto& p : round) out.back().push_back(p.suffix);
    }
    return out;
  }

  /// One diagram per round: the cells still present at the start of the round,
  /// picked cells written as value_suffix, cells removed earlier as '.'.
  std::string render(const Tableau& t) const {
    const auto& shape = t.shape();
    std::vector<std::vector<int>> removed_in(static_cast<std::size_t>(shape.rows()));
    for (int r = 0; r < shape.rows(); ++r)
      removed_in[static_cast<std::size_t>(r)].assign(static_cast<std::size_t>(shape.row_end(r)), -1);
    std::vector<std::vector<int>> suffix_of = removed_in;
    for (std::size_t k = 0; k < rounds.size(); ++k)
      for (const auto& p : rounds[k]) {
        removed_in[static_cast<std::size_t>(p.row)][static_cast<std::size_t>(p.col)] = static_cast<int>(k);
        suffix_of[static_cast<std::size_t>(p.row)][static_cast<std::size_t>(p.col)] = p.suffix;
      }
    std::ostringstream os;
    for (std::size_t k = 0; k < rounds.size(); ++k) {
      os << "round " << k + 1 << ":\n";
      for (int r = 0; r < shape.rows(); ++r) {
        for (int c = 0; c < shape.row_end(r); ++c) {
          if (c) os << ' ';
          const int when = removed_in[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)];
          if (when >= 0 && when < static_cast<int>(k)) {
            os << '.';
          } else {
            os << t.value(r, c);
            if (when == static_cast<int>(k)) os << '_' << suffix_of[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)];
          }
        }
        os << '\n';
      }
    }
    return os.str();
  }
};

struct ChargeResult {
  int charge = 0;
  std::vector<int> index;  // index[j] = ind(j+1)
  ExtractionRecord record;
};

namespace detail {

inline std::vector<int> partition_content(const Tableau& t) {
  std::vector<int> mu = t.content();
  for (std::size_t j = 0; j < mu.size(); ++j)
    if (mu[j] == 0 || (j > 0 && mu[j] > mu[j - 1]))
      throw std::domain_error("charge: tableau content is not a partition");
  return mu;
}

}  // namespace detail

inline ChargeResult charge_with_record(const Tableau& t) {
  std::vector<int> remaining = detail::partition_content(t);
  ChargeResult res;
  res.index.assign(remaining.size(), 0);

  struct Cell {
    int row, col, value;
  };
  std::vector<Cell> reading;
  for (int r = 0; r < t.shape().rows(); ++r)
    for (int c = t.shape().row_end(r); c-- > t.shape().row_begin(r);) reading.push_back({r, c, t.value(r, c)});

  while (!reading.empty()) {
    int letters = 0;
    while (letters < static_cast<int>(remaining.size()) && remaining[static_cast<std::size_t>(letters)] > 0)
      ++letters;
    std::vector<std::size_t> picked;
    std::vector<ExtractionRecord::Pick> round;
    int windings = 0;
    std::size_t pos = 0;
    for (int v = 1; v <= letters; ++v) {
      std::optional<std::size_t> hit;
      const std::size_t start = v == 1 ? 0 : pos + 1;
      for (std::size_t p = start; p < reading.size() && !hit; ++p)
        if (reading[p].value == v) hit = p;
      if (!hit) {
        ++windings;
        for (std::size_t p = 0; p < start && !hit; ++p)
          if (reading[p].value == v) hit = p;
      }
      if (!hit) throw std::logic_error("charge: letter missing during extraction");
      pos = *hit;
      picked.push_back(pos);
      round.push_back({v, reading[pos].row, reading[pos].col, windings});
      res.index[static_cast<std::size_t>(v - 1)] += windings;
      --remaining[static_cast<std::size_t>(v - 1)];
    }
    std::sort(picked.begin(), picked.end());
    for (std::size_t k = picked.size(); k-- > 0;)
      reading.erase(reading.begin() + static_cast<std::ptrdiff_t>(picked[k]));
    res.record.rounds.push_back(std::move(round));
  }
  for (int x : res.index) res.charge += x;
  return res;
}

inline int charge(const Tableau& t) { return charge_with_record(t).charge; }

inline std::vector<int> index_vector(const Tableau& t) { return charge_with_record(t).index; }

namespace detail {

inline CrystalElement superstandard_factor(Flavor flavor, int n, int row, int length) {
  std::vector<int> e(static_cast<std::size_t>(length));
  for (int c = 0; c < length; ++c) e[static_cast<std::size_t>(c)] = flavor == Flavor::Row ? row + 1 : c + 1;
  return CrystalElement(flavor, n, std::move(e));
}

}  // namespace detail

/// Smallest rank for which the word of a tableau of outer shape `outer` exists.
inline int minimal_rank(Flavor flavor, const Partition& outer) {
  const int need = flavor == Flavor::Row ? outer.length() : outer[0];
  return std::max(2, need);
}

/// Highest word attached to a tableau. Row: factor v lists the rows (1-based)
/// of the cells holding v. Column: factor v lists their columns. A skew
/// tableau is preceded by the factors of the inner shape filled row r -> r.
inline TensorWord tableau_to_word(const Tableau& t, Flavor flavor, int n) {
  const auto& shape = t.shape();
  if (n < minimal_rank(flavor, shape.outer()))
    throw std::domain_error("tableau_to_word: rank too small for this shape");
  std::vector<CrystalElement> factors;
  for (int r = 0; r < shape.inner().length(); ++r)
    factors.push_back(detail::superstandard_factor(flavor, n, r, shape.inner()[r]));
  const auto content = t.content();
  std::vector<std::vector<int>> letters(content.size());
  for (int r = 0; r < shape.rows(); ++r)
    for (int c = shape.row_begin(r); c < shape.row_end(r); ++c)
      letters[static_cast<std::size_t>(t.value(r, c) - 1)].push_back(flavor == Flavor::Row ? r + 1 : c + 1);
  for (auto& l : letters) {
    if (l.empty()) throw std::domain_error("tableau_to_word: content skips a letter");
    std::sort(l.begin(), l.end());
    factors.emplace_back(flavor, n, std::move(l));
  }
  return TensorWord(std::move(factors));
}

/// Inverse of tableau_to_word. `inner` is the inner shape of a skew tableau;
/// the first inner.length() factors must be its superstandard prefix.
inline Tableau word_to_tableau(const TensorWord& w, const Partition& inner = {}) {
  if (!is_highest(w)) throw std::domain_error("word_to_tableau: word is not highest weight");
  const Flavor flavor = w.flavor();
  const int n = w.rank();
  const auto prefix = static_cast<std::size_t>(inner.length());
  if (w.length() <= prefix) throw std::domain_error("word_to_tableau: word shorter than inner prefix");
  for (std::size_t r = 0; r < prefix; ++r)
    if (w[r] != detail::superstandard_factor(flavor, n, static_cast<int>(r), inner[static_cast<int>(r)]))
      throw std::domain_error("word_to_tableau: prefix does not match the inner shape");

  if (flavor == Flavor::Row) {
    std::vector<std::vector<int>> rows(static_cast<std::size_t>(n));
    for (std::size_t v = prefix; v < w.length(); ++v)
      for (int r : w[v].entries()) rows[static_cast<std::size_t>(r - 1)].push_back(static_cast<int>(v - prefix) + 1);
    std::vector<int> outer(static_cast<std::size_t>(n));
    for (int r = 0; r < n; ++r) outer[static_cast<std::size_t>(r)] = inner[r] + static_cast<int>(rows[static_cast<std::size_t>(r)].size());
    SkewShape shape(Partition(outer), inner);
    rows.resize(static_cast<std::size_t>(shape.rows()));
    return Tableau(std::move(shape), std::move(rows));
  }

  const Partition inner_t = inner.conjugate();
  std::vector<std::vector<int>> cols(static_cast<std::size_t>(n));
  for (std::size_t v = prefix; v < w.length(); ++v)
    for (int c : w[v].entries()) cols[static_cast<std::size_t>(c - 1)].push_back(static_cast<int>(v - prefix) + 1);
  std::vector<int> heights(static_cast<std::size_t>(n));
  for (int c = 0; c < n; ++c)
    heights[static_cast<std::size_t>(c)] = inner_t[c] + static_cast<int>(cols[static_cast<std::size_t>(c)].size());
  const Partition outer = Partition(heights).conjugate();
  SkewShape shape(outer, inner);
  std::vector<std::vector<int>> rows(static_cast<std::size_t>(shape.rows()));
  for (int r = 0; r < shape.rows(); ++r)
    for (int c = shape.row_begin(r); c < shape.row_end(r); ++c)
      rows[static_cast<std::size_t>(r)].push_back(
          cols[static_cast<std::size_t>(c)][static_cast<std::size_t>(r - inner_t[c])]);
  return Tableau(std::move(shape), std::move(rows));
}

/// Local index of the last element of a chain a1 x a2 x ... x b of column
/// elements with weakly decreasing sizes, relative to an order of a1's dots.
///
/// Each step joins the dots of the current element, taken in the current
/// order, to dots of the next: the nearest unjoined dot at the same height or
/// above, or failing that the lowest unjoined dot. The joined dots define the
/// order used by the next step. A line whose right end lies strictly below
/// its left end is a down line; every step counts the down lines among its
/// first |b| lines.
struct LocalIndex {
  std::vector<int> steps;
  int total = 0;
  std::vector<std::vector<int>> orders;  // orders[0] is the given order of a1
};

inline LocalIndex local_index(const CrystalElement& a1, std::span<const int> order,
                              std::span<const CrystalElement> rest) {
  if (a1.flavor() != Flavor::Column) throw std::domain_error("local_index: column elements required");
  {
    std::vector<int> sorted(order.begin(), order.end());
    std::sort(sorted.begin(), sorted.end());
    if (sorted != a1.entry_vector()) throw std::domain_error("local_index: order is not a permutation of a1");
  }
  int prev_size = a1.size();
  for (const auto& b : rest) {
    if (b.flavor() != Flavor::Column || b.rank() != a1.rank())
      throw std::domain_error("local_index: chain must consist of column elements of one rank");
    if (b.size() > prev_size) throw std::domain_error("local_index: sizes must weakly decrease");
    prev_size = b.size();
  }

  LocalIndex res;
  res.orders.emplace_back(order.begin(), order.end());
  if (rest.empty()) return res;
  const auto limit = static_cast<std::size_t>(rest.back().size());
  for (const auto& b : rest) {
    const auto& cur = res.orders.back();
    std::vector<int> avail = b.entry_vector();
    std::vector<int> next;
    int downs = 0;
    for (std::size_t m = 0; m < static_cast<std::size_t>(b.size()); ++m) {
      const int p = cur[m];
      auto it = std::upper_bound(avail.begin(), avail.end(), p);
      const auto pick = it == avail.begin() ? avail.end() - 1 : it - 1;
      if (*pick > p && m < limit) ++downs;
      next.push_back(*pick);
      avail.erase(pick);
    }
    res.steps.push_back(downs);
    res.total += downs;
    res.orders.push_back(std::move(next));
  }
  return res;
}

/// The bottom-up order (a_k, ..., a_1) of a column element's dots.
inline std::vector<int> bottom_up_order(const CrystalElement& a) {
  std::vector<int> o = a.entry_vector();
  std::reverse(o.begin(), o.end());
  return o;
}

}  // namespace crystal
