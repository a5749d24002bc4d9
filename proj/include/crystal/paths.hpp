#pragma once

/*
  Paths, one-dimensional configuration sums and finite-N branching data.

  A path b_L (x) ... (x) b_1 is stored left to right, so b_j = word[L - j].
  Row paths live in the L-fold tensor power of the k-row crystal with
  L = nN + i; column paths use k-columns with L = nN (level one, i = 0).

  Ground states, letters taken in 1..n:
    Row      p_j = (i + 1 - j)^k
    Column   p_j = {(n - j)k + 1, ..., (n - j + 1)k}
*/

#include <algorithm>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "crystal/crystal_core.hpp"
#include "crystal/kostka.hpp"
#include "crystal/laurent_poly.hpp"
#include "crystal/partition.hpp"
#include "crystal/rmatrix.hpp"

namespace crystal {

struct PathSpec {
  Flavor flavor = Flavor::Row;
  int rank = 2;   // n
  int level = 1;  // k: row length, or column height
  int residue = 0;  // i; always 0 for columns
  int N = 1;

  int length() const noexcept { return rank * N + (flavor == Flavor::Row ? residue : 0); }

  void validate() const {
    if (rank < 2) throw std::domain_error("path spec: rank must be at least 2");
    if (N < 0) throw std::domain_error("path spec: N must be non-negative");
    if (flavor == Flavor::Row) {
      if (level < 1) throw std::domain_error("path spec: level must be positive");
      if (residue < 0 || residue >= rank) throw std::domain_error("path spec: residue must lie in 0..n-1");
    } else {
      if (level < 1 || level >= rank) throw std::domain_error("path spec: column height must lie in 1..n-1");
      if (residue != 0) throw std::domain_error("path spec: column paths have residue 0");
    }
  }
};

namespace detail {

inline int mod_letter(long long x, int n) {
  const long long r = ((x - 1) % n + n) % n;
  return static_cast<int>(r) + 1;
}

}  // namespace detail

/// p_j for j >= 1.
inline CrystalElement ground_state_factor(const PathSpec& spec, int j) {
  const int n = spec.rank, k = spec.level;
  if (spec.flavor == Flavor::Row)
    return CrystalElement(Flavor::Row, n, std::vector<int>(static_cast<std::size_t>(k),
                                                           detail::mod_letter(spec.residue + 1 - j, n)));
  std::vector<int> e;
  for (long long x = static_cast<long long>(n - j) * k + 1; x <= static_cast<long long>(n - j + 1) * k; ++x)
    e.push_back(detail::mod_letter(x, n));
  std::sort(e.begin(), e.end());
  return CrystalElement(Flavor::Column, n, std::move(e));
}

/// p_L (x) ... (x) p_1, stored left to right; empty when L = 0.
inline std::vector<CrystalElement> ground_state_path(const PathSpec& spec) {
  spec.validate();
  std::vector<CrystalElement> out;
  for (int j = spec.length(); j >= 1; --j) out.push_back(ground_state_factor(spec, j));
  return out;
}

namespace detail {

inline int pair_energy(const CrystalElement& left, const CrystalElement& right) {
  return r_map(left, right).energy;
}

// sum_{j=1}^{L-1} j H(b_{j+1}, b_j) for a path stored left to right.
inline long long weighted_energy(std::span<const CrystalElement> path) {
  const long long L = static_cast<long long>(path.size());
  long long s = 0;
  for (long long j = 1; j < L; ++j)
    s += j * pair_energy(path[static_cast<std::size_t>(L - j - 1)], path[static_cast<std::size_t>(L - j)]);
  return s;
}

}  // namespace detail

/// sum_{j=1}^{L-1} j H(p_{j+1}, p_j) over the ground state.
inline long long a_norm_energy_sum(const PathSpec& spec) {
  const auto p = ground_state_path(spec);
  return detail::weighted_energy(p);
}

/// Row: H((j-1)^k, j^k) = k when j = 1 (mod n) and 0 otherwise. Throws
/// std::logic_error if the energy function disagrees.
inline void check_ground_steps(int n, int k) {
  for (int j = 1; j <= n; ++j) {
    const CrystalElement left(Flavor::Row, n, std::vector<int>(static_cast<std::size_t>(k), detail::mod_letter(j - 1, n)));
    const CrystalElement right(Flavor::Row, n, std::vector<int>(static_cast<std::size_t>(k), j));
    const int want = j == 1 ? k : 0;
    const int got = detail::pair_energy(left, right);
    if (got != want)
      throw std::logic_error("ground step energy H(" + left.label() + "," + right.label() + ") = " +
                             std::to_string(got) + ", expected " + std::to_string(want));
  }
}

/// Normalization exponent A_N. Row: the closed form knN(N-1)/2 + kNi, checked
/// against the ground state energies. Column: the ground state energy sum.
inline long long a_norm(const PathSpec& spec) {
  spec.validate();
  const long long sum = a_norm_energy_sum(spec);
  if (spec.flavor == Flavor::Column) return sum;
  check_ground_steps(spec.rank, spec.level);
  const long long k = spec.level, n = spec.rank, N = spec.N, i = spec.residue;
  const long long closed = k * n * N * (N - 1) / 2 + k * N * i;
  if (closed != sum)
    throw std::logic_error("A_N closed form " + std::to_string(closed) + " differs from energy sum " +
                           std::to_string(sum));
  return closed;
}

/// omega_N(b) = sum_{j=1}^{L} j (H(b_{j+1}, b_j) - H(p_{j+1}, p_j)), b_{L+1} = p_{L+1}.
inline long long omega_N(std::span<const CrystalElement> path, const PathSpec& spec) {
  spec.validate();
  const int L = spec.length();
  if (static_cast<int>(path.size()) != L)
    throw std::domain_error("omega_N: path has " + std::to_string(path.size()) + " factors, expected " +
                            std::to_string(L));
  for (const auto& b : path)
    if (b.flavor() != spec.flavor || b.rank() != spec.rank || b.size() != spec.level)
      throw std::domain_error("omega_N: factor " + b.label() + " does not belong to the path crystal");
  if (L == 0) return 0;
  const auto ground = ground_state_path(spec);
  const CrystalElement cap = ground_state_factor(spec, L + 1);
  long long s = detail::weighted_energy(path) - detail::weighted_energy(ground);
  s += static_cast<long long>(L) * (detail::pair_energy(cap, path[0]) - detail::pair_energy(cap, ground[0]));
  return s;
}

inline long long omega_N(const TensorWord& w, const PathSpec& spec) { return omega_N(w.factors(), spec); }

/// Row: lambda^{(N)}_j = lambda_j + kN - (|lambda| - ki)/n over n parts.
/// Column: (n^{kN - |lambda|/n}, lambda). Empty optional when some part would
/// be negative.
inline std::optional<Partition> lambda_N(const Partition& lambda, const PathSpec& spec) {
  spec.validate();
  const int n = spec.rank, k = spec.level;
  if (spec.flavor == Flavor::Row) {
    if (lambda.length() > n) throw std::domain_error("lambda_N: more than n parts");
    const int excess = lambda.size() - k * spec.residue;
    if (((excess % n) + n) % n != 0)
      throw std::domain_error("lambda_N: |lambda| must be congruent to k*i mod n");
    const int shift = k * spec.N - excess / n;
    std::vector<int> parts(static_cast<std::size_t>(n));
    for (int j = 0; j < n; ++j) {
      parts[static_cast<std::size_t>(j)] = lambda[j] + shift;
      if (parts[static_cast<std::size_t>(j)] < 0) return std::nullopt;
    }
    return Partition(parts);
  }
  if (lambda.length() > 0 && lambda[0] > n) throw std::domain_error("lambda_N: parts must not exceed n");
  if (lambda.size() % n != 0) throw std::domain_error("lambda_N: |lambda| must be divisible by n");
  const int copies = k * spec.N - lambda.size() / n;
  if (copies < 0) return std::nullopt;
  std::vector<int> parts(static_cast<std::size_t>(copies), n);
  parts.insert(parts.end(), lambda.parts().begin(), lambda.parts().end());
  return Partition(parts);
}

/// mu^{(N)} = (k^L).
inline Partition mu_N(const PathSpec& spec) {
  spec.validate();
  return Partition(std::vector<int>(static_cast<std::size_t>(spec.length()), spec.level));
}

/// Content (letter counts 1..n) of the highest paths counted by one_dcs.
inline std::optional<std::vector<int>> path_content(const Partition& lambda, const PathSpec& spec) {
  const auto ln = lambda_N(lambda, spec);
  if (!ln) return std::nullopt;
  const Partition shape = spec.flavor == Flavor::Row ? *ln : ln->conjugate();
  std::vector<int> c(static_cast<std::size_t>(spec.rank));
  for (int j = 0; j < spec.rank; ++j) c[static_cast<std::size_t>(j)] = shape[j];
  return c;
}

/// All highest weight paths of length L with the given letter content.
inline std::vector<TensorWord> highest_paths(const PathSpec& spec, const std::vector<int>& content) {
  spec.validate();
  if (spec.length() == 0) return {};
  const std::vector<int> sizes(static_cast<std::size_t>(spec.length()), spec.level);
  return enumerate_highest_words(spec.flavor, spec.rank, sizes, content);
}

/// sum of q^{omega_N(b)} over highest paths of weight lambda (row) or
/// lambda' (column).
inline LaurentPoly one_dcs(const Partition& lambda, const PathSpec& spec) {
  const auto content = path_content(lambda, spec);
  LaurentPoly result;
  if (!content) return result;
  if (spec.length() == 0) {
    if (std::all_of(content->begin(), content->end(), [](int c) { return c == 0; })) result.add_term(0, 1);
    return result;
  }
  for (const auto& w : highest_paths(spec, *content)) result.add_term(static_cast<int>(omega_N(w, spec)), 1);
  return result;
}

/// q^{-A_N} K_{lambda^{(N)} mu^{(N)}}(q) for rows, q^{-A_N} K(q^{-1}) for columns.
inline LaurentPoly normalized_kostka(const Partition& lambda, const PathSpec& spec,
                                     KostkaMethod method = KostkaMethod::Charge) {
  const auto ln = lambda_N(lambda, spec);
  if (!ln) return {};
  LaurentPoly k = kostka_poly(*ln, mu_N(spec), method,
                              method == KostkaMethod::Charge ? std::nullopt : std::optional<int>(spec.rank));
  if (spec.flavor == Flavor::Column) k = k.inverted();
  return k.shifted(static_cast<int>(-a_norm(spec)));
}

/// Coefficients of q^0..q^D of normalized_kostka.
inline std::vector<std::int64_t> branching_coeffs(const Partition& lambda, const PathSpec& spec, int degree_cut,
                                                  KostkaMethod method = KostkaMethod::Charge) {
  if (degree_cut < 0) throw std::domain_error("branching: degree cut must be non-negative");
  const auto p = normalized_kostka(lambda, spec, method);
  std::vector<std::int64_t> out(static_cast<std::size_t>(degree_cut) + 1);
  for (int d = 0; d <= degree_cut; ++d) out[static_cast<std::size_t>(d)] = p.coefficient(d);
  return out;
}

/// Largest d <= D with coefficients 0..d equal in both lists, or -1.
inline int agreement_bound(const std::vector<std::int64_t>& a, const std::vector<std::int64_t>& b) {
  const std::size_t m = std::min(a.size(), b.size());
  for (std::size_t d = 0; d < m; ++d)
    if (a[d] != b[d]) return static_cast<int>(d) - 1;
  return static_cast<int>(m) - 1;
}

struct BranchingRow {
  int N;
  long long a_norm;
  std::optional<Partition> lambda_N;
  Partition mu_N;
  LaurentPoly normalized;
  std::vector<std::int64_t> coeffs;
  std::optional<int> stable_upto;  // agreement with the previous N
};

struct BranchingTable {
  Flavor flavor;
  int rank, level, residue;
  Partition lambda;
  int degree_cut;
  std::vector<BranchingRow> rows;
};

inline BranchingTable branching_table(Flavor flavor, const Partition& lambda, int n, int k, int i, int N_from,
                                      int N_to, int degree_cut, KostkaMethod method = KostkaMethod::Charge) {
  if (N_from > N_to) throw std::domain_error("branching: empty N range");
  if (degree_cut < 0) throw std::domain_error("branching: degree cut must be non-negative");
  BranchingTable t{flavor, n, k, i, lambda, degree_cut, {}};
  for (int N = N_from; N <= N_to; ++N) {
    const PathSpec spec{flavor, n, k, i, N};
    spec.validate();
    BranchingRow row{N, a_norm(spec), lambda_N(lambda, spec), mu_N(spec), {}, {}, std::nullopt};
    row.normalized = normalized_kostka(lambda, spec, method);
    row.coeffs = branching_coeffs(lambda, spec, degree_cut, method);
    if (!t.rows.empty()) row.stable_upto = agreement_bound(t.rows.back().coeffs, row.coeffs);
    t.rows.push_back(std::move(row));
  }
  return t;
}

struct LevelOneCheck {
  std::vector<std::int64_t> row_coeffs;     // rows at level 1, weight lambda'
  std::vector<std::int64_t> column_coeffs;  // k-columns, weight lambda
  int row_stable;                            // stability bound of each table at N_max
  int column_stable;
  int compared_upto;  // min of the two bounds
  bool consistent;
};

/// Level one: the row description (k = 1, i = 0) at weight lambda' against
/// the k-column description at lambda, on the coefficients both have
/// stabilized. Needs N_max >= 2 so each side has a stability bound.
inline LevelOneCheck level_one_crosscheck(const Partition& lambda, int n, int k, int N_max, int degree_cut) {
  if (N_max < 2) throw std::domain_error("level-one check: needs N_max >= 2");
  const auto rows = branching_table(Flavor::Row, lambda.conjugate(), n, 1, 0, N_max - 1, N_max, degree_cut);
  const auto cols = branching_table(Flavor::Column, lambda, n, k, 0, N_max - 1, N_max, degree_cut);
  LevelOneCheck c;
  c.row_coeffs = rows.rows.back().coeffs;
  c.column_coeffs = cols.rows.back().coeffs;
  c.row_stable = *rows.rows.back().stable_upto;
  c.column_stable = *cols.rows.back().stable_upto;
  c.compared_upto = std::min(c.row_stable, c.column_stable);
  c.consistent = agreement_bound(c.row_coeffs, c.column_coeffs) >= c.compared_upto;
  return c;
}

}  // namespace crystal
