#pragma once

// Integer partitions and skew shapes.
//
// Every enumeration in the library is driven by these two types. A Partition
// stores its nonzero parts in weakly decreasing order; trailing zeros given to
// the constructor are dropped so that sl_n weights such as (2,1,0) and the
// partition (2,1) compare equal.

#include <algorithm>
#include <compare>
#include <cstddef>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace crystal {

class Partition {
 public:
  Partition() = default;

  explicit Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
    for (std::size_t i = 0; i < parts_.size(); ++i) {
      if (parts_[i] <= 0)
        throw std::domain_error("partition parts must be positive (zeros only at the end)");
      if (i > 0 && parts_[i] > parts_[i - 1])
        throw std::domain_error("partition parts must be weakly decreasing");
    }
  }

  Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

  const std::vector<int>& parts() const noexcept { return parts_; }
  int length() const noexcept { return static_cast<int>(parts_.size()); }
  bool empty() const noexcept { return parts_.empty(); }
  int size() const noexcept { return std::accumulate(parts_.begin(), parts_.end(), 0); }

  // Zero beyond the last part; row indices are 0-based.
  int operator[](int row) const noexcept {
    return row >= 0 && row < length() ? parts_[static_cast<std::size_t>(row)] : 0;
  }

  Partition conjugate() const {
    std::vector<int> out(parts_.empty() ? 0 : static_cast<std::size_t>(parts_.front()), 0);
    for (int p : parts_)
      for (int c = 0; c < p; ++c) ++out[static_cast<std::size_t>(c)];
    return Partition(std::move(out));
  }

  bool contains(const Partition& other) const noexcept {
    if (other.length() > length()) return false;
    for (int i = 0; i < other.length(); ++i)
      if (other[i] > (*this)[i]) return false;
    return true;
  }

  // Multiplicity of the part value `v`.
  int multiplicity(int v) const noexcept {
    return static_cast<int>(std::count(parts_.begin(), parts_.end(), v));
  }

  std::string to_string() const {
    std::string s = "(";
    for (std::size_t i = 0; i < parts_.size(); ++i) {
      if (i) s += ',';
      s += std::to_string(parts_[i]);
    }
    return s + ")";
  }

  auto operator<=>(const Partition&) const = default;

 private:
  std::vector<int> parts_;
};

namespace detail {

inline void partitions_rec(int remaining, int max_part, int max_length, std::vector<int>& cur,
                           std::vector<Partition>& out) {
  if (remaining == 0) {
    out.emplace_back(cur);
    return;
  }
  if (static_cast<int>(cur.size()) == max_length) return;
  for (int p = std::min(remaining, max_part); p >= 1; --p) {
    cur.push_back(p);
    partitions_rec(remaining - p, p, max_length, cur, out);
    cur.pop_back();
  }
}

}  // namespace detail

/// All partitions of `m` with at most `max_length` parts, in reverse
/// lexicographic order ((m) first).
inline std::vector<Partition> partitions_of(int m, int max_length = -1) {
  if (m < 0) throw std::domain_error("partitions_of: negative size");
  if (max_length < 0) max_length = m;
  std::vector<Partition> out;
  std::vector<int> cur;
  detail::partitions_rec(m, m, max_length, cur, out);
  return out;
}

/// A skew diagram outer/inner. A straight shape has an empty inner partition.
class SkewShape {
 public:
  SkewShape() = default;
  explicit SkewShape(Partition outer, Partition inner = {})
      : outer_(std::move(outer)), inner_(std::move(inner)) {
    if (!outer_.contains(inner_))
      throw std::domain_error("skew shape: inner partition must be contained in outer");
  }

  const Partition& outer() const noexcept { return outer_; }
  const Partition& inner() const noexcept { return inner_; }
  bool is_straight() const noexcept { return inner_.empty(); }
  int size() const noexcept { return outer_.size() - inner_.size(); }
  int rows() const noexcept { return outer_.length(); }

  // First and one-past-last column of row `r` (0-based).
  int row_begin(int r) const noexcept { return inner_[r]; }
  int row_end(int r) const noexcept { return outer_[r]; }

  std::string to_string() const {
    return is_straight() ? outer_.to_string() : outer_.to_string() + "/" + inner_.to_string();
  }

  auto operator<=>(const SkewShape&) const = default;

 private:
  Partition outer_;
  Partition inner_;
};

}  // namespace crystal
