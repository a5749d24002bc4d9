#pragma once

/*
  Symmetric polynomials in n variables, computed without tableaux:

  - complete and elementary polynomials by direct expansion;
  - Schur polynomials by the Jacobi-Trudi determinant det(h_{l_i - i + j});
  - Hall-Littlewood P by symmetrization. The numerator
        sum_w sign(w) w( x^mu prod_{i<j} (x_i - t x_j) )
    is an alternant, so it splits over Schur functions; the coefficients are
    polynomials in t, divided exactly by v_mu(t).

  v_mu(t) = prod_m v_{m}(t) over the multiplicities m of all parts of mu padded
  with zeros to n variables, v_m(t) = prod_{j=1}^{m} (1 + t + ... + t^{j-1}).
  Worked case, n = 3, mu = (2): parts (2,0,0), multiplicities 1 and 2, so
  v_mu(t) = 1 * (1 + t).

  Because P_mu is found as a polynomial in t, evaluation at any rational point
  is exact, including points where v_mu vanishes.
*/

#include <algorithm>
#include <cstddef>
#include <map>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "crystal/kostka.hpp"
#include "crystal/laurent_poly.hpp"
#include "crystal/partition.hpp"

namespace crystal {

using Rational = boost::multiprecision::cpp_rational;

namespace detail {

inline bool coeff_is_zero(const Rational& c) { return c == 0; }
inline bool coeff_is_zero(const LaurentPoly& c) { return c.is_zero(); }
inline bool coeff_is_zero(long long c) { return c == 0; }

}  // namespace detail

/// Polynomial in n commuting variables; exponent vectors have length n.
template <class C>
class MultiPoly {
 public:
  using Exponent = std::vector<int>;

  explicit MultiPoly(int vars) : vars_(vars) {
    if (vars < 1) throw std::domain_error("MultiPoly: need at least one variable");
  }

  static MultiPoly constant(int vars, const C& c) {
    MultiPoly p(vars);
    p.add_term(Exponent(static_cast<std::size_t>(vars), 0), c);
    return p;
  }

  int vars() const noexcept { return vars_; }
  const std::map<Exponent, C>& terms() const noexcept { return terms_; }

  C coefficient(const Exponent& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? C{} : it->second;
  }

  void add_term(const Exponent& e, const C& c) {
    if (static_cast<int>(e.size()) != vars_) throw std::domain_error("MultiPoly: exponent length mismatch");
    if (detail::coeff_is_zero(c)) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
      it->second += c;
      if (detail::coeff_is_zero(it->second)) terms_.erase(it);
    }
  }

  MultiPoly& operator+=(const MultiPoly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
  }
  MultiPoly& operator-=(const MultiPoly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
  }
  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }

  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
    MultiPoly r(a.vars_);
    Exponent e(static_cast<std::size_t>(a.vars_));
    for (const auto& [ea, ca] : a.terms_)
      for (const auto& [eb, cb] : b.terms_) {
        for (std::size_t k = 0; k < e.size(); ++k) e[k] = ea[k] + eb[k];
        r.add_term(e, ca * cb);
      }
    return r;
  }

  MultiPoly scaled(const C& c) const {
    MultiPoly r(vars_);
    for (const auto& [e, x] : terms_) r.add_term(e, x * c);
    return r;
  }

  bool is_zero() const noexcept { return terms_.empty(); }
  friend bool operator==(const MultiPoly&, const MultiPoly&) = default;

 private:
  int vars_;
  std::map<Exponent, C> terms_;
};

/// Coefficients of a symmetric polynomial in the monomial basis m_lambda.
using MonomialExpansion = std::map<Partition, Rational>;

namespace detail {

// Coefficient of x^lambda for each partition lambda, i.e. the m_lambda
// coefficients of a symmetric polynomial.
template <class C>
std::map<Partition, C> dominant_coefficients(const MultiPoly<C>& p) {
  std::map<Partition, C> out;
  for (const auto& [e, c] : p.terms()) {
    if (!std::is_sorted(e.begin(), e.end(), std::greater<>())) continue;
    out.emplace(Partition(e), c);
  }
  return out;
}

inline std::vector<std::vector<int>> compositions(int total, int parts) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur(static_cast<std::size_t>(parts), 0);
  auto rec = [&](auto&& self, int pos, int left) -> void {
    if (pos == parts - 1) {
      cur[static_cast<std::size_t>(pos)] = left;
      out.push_back(cur);
      return;
    }
    for (int a = left; a >= 0; --a) {
      cur[static_cast<std::size_t>(pos)] = a;
      self(self, pos + 1, left - a);
    }
  };
  rec(rec, 0, total);
  return out;
}

inline int permutation_sign(const std::vector<std::size_t>& perm) {
  int inversions = 0;
  for (std::size_t a = 0; a < perm.size(); ++a)
    for (std::size_t b = a + 1; b < perm.size(); ++b)
      if (perm[a] > perm[b]) ++inversions;
  return inversions % 2 ? -1 : 1;
}

}  // namespace detail

/// h_r(x_1..x_n); zero for r < 0.
inline MultiPoly<Rational> complete_poly(int r, int n) {
  MultiPoly<Rational> p(n);
  if (r < 0) return p;
  for (auto& e : detail::compositions(r, n)) p.add_term(e, 1);
  return p;
}

/// e_r(x_1..x_n); zero unless 0 <= r <= n.
inline MultiPoly<Rational> elementary_poly(int r, int n) {
  MultiPoly<Rational> p(n);
  if (r < 0 || r > n) return p;
  std::vector<int> e(static_cast<std::size_t>(n), 0);
  std::fill(e.begin(), e.begin() + r, 1);
  std::sort(e.begin(), e.end());
  do p.add_term(e, 1);
  while (std::next_permutation(e.begin(), e.end()));
  return p;
}

inline MultiPoly<Rational> complete_product(const Partition& mu, int n) {
  auto p = MultiPoly<Rational>::constant(n, 1);
  for (int part : mu.parts()) p = p * complete_poly(part, n);
  return p;
}

inline MultiPoly<Rational> elementary_product(const Partition& mu, int n) {
  auto p = MultiPoly<Rational>::constant(n, 1);
  for (int part : mu.parts()) p = p * elementary_poly(part, n);
  return p;
}

/// s_lambda(x_1..x_n) as det(h_{lambda_i - i + j}), expanded over permutations.
/// Zero when l(lambda) > n.
inline MultiPoly<Rational> schur_poly(const Partition& lambda, int n) {
  MultiPoly<Rational> result(n);
  const int l = lambda.length();
  if (l > n) return result;
  if (l == 0) return MultiPoly<Rational>::constant(n, 1);
  std::map<int, MultiPoly<Rational>> h;
  auto h_of = [&](int r) -> const MultiPoly<Rational>& {
    auto it = h.find(r);
    if (it == h.end()) it = h.emplace(r, complete_poly(r, n)).first;
    return it->second;
  };
  std::vector<std::size_t> perm(static_cast<std::size_t>(l));
  std::iota(perm.begin(), perm.end(), 0);
  do {
    auto term = MultiPoly<Rational>::constant(n, detail::permutation_sign(perm));
    bool zero = false;
    for (int i = 0; i < l && !zero; ++i) {
      const int r = lambda[i] - i + static_cast<int>(perm[static_cast<std::size_t>(i)]);
      if (r < 0) zero = true;
      else term = term * h_of(r);
    }
    if (!zero) result += term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return result;
}

/// Monomial expansion of s_lambda in n variables.
inline MonomialExpansion schur_expansion(const Partition& lambda, int n) {
  if (lambda.length() > n)
    throw std::domain_error("schur_expansion: " + lambda.to_string() + " has more than " + std::to_string(n) +
                            " parts");
  return detail::dominant_coefficients(schur_poly(lambda, n));
}

/// v_mu(t) over n variables (zero parts included).
inline LaurentPoly hl_normalizer(const Partition& mu, int n) {
  if (mu.length() > n) throw std::domain_error("hl_normalizer: too many parts");
  std::map<int, int> mult;
  for (int k = 0; k < n; ++k) ++mult[mu[k]];
  LaurentPoly v = LaurentPoly::constant(1);
  for (auto [part, m] : mult) {
    for (int j = 1; j <= m; ++j) {
      LaurentPoly qint;
      for (int a = 0; a < j; ++a) qint.add_term(a, 1);
      v *= qint;
    }
  }
  return v;
}

/// P_mu(x_1..x_n; t) in the Schur basis, coefficients in Z[t].
inline std::map<Partition, LaurentPoly> hall_littlewood_schur(const Partition& mu, int n) {
  if (mu.length() > n)
    throw std::domain_error("hall_littlewood: " + mu.to_string() + " has more than " + std::to_string(n) + " parts");
  using Poly = MultiPoly<LaurentPoly>;
  std::vector<int> e(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) e[static_cast<std::size_t>(k)] = mu[k];
  Poly num(n);
  num.add_term(e, LaurentPoly::constant(1));
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      Poly factor(n);
      std::vector<int> xi(static_cast<std::size_t>(n), 0), xj(static_cast<std::size_t>(n), 0);
      xi[static_cast<std::size_t>(i)] = 1;
      xj[static_cast<std::size_t>(j)] = 1;
      factor.add_term(xi, LaurentPoly::constant(1));
      factor.add_term(xj, LaurentPoly::monomial(1, -1));
      num = num * factor;
    }
  // Antisymmetrize: x^a contributes sign * a_{sorted a}, and a_{lambda+delta}/a_delta = s_lambda.
  std::map<Partition, LaurentPoly> numer;
  std::vector<std::size_t> idx(static_cast<std::size_t>(n));
  for (const auto& [a, c] : num.terms()) {
    std::iota(idx.begin(), idx.end(), 0);
    std::sort(idx.begin(), idx.end(), [&](std::size_t x, std::size_t y) { return a[x] > a[y]; });
    bool repeated = false;
    std::vector<int> lam(static_cast<std::size_t>(n));
    for (std::size_t k = 0; k < idx.size(); ++k) {
      if (k && a[idx[k]] == a[idx[k - 1]]) repeated = true;
      lam[k] = a[idx[k]] - (n - 1 - static_cast<int>(k));
    }
    if (repeated) continue;
    const int sign = detail::permutation_sign(idx);
    if (lam.back() < 0) throw std::logic_error("hall_littlewood: negative shifted exponent");
    numer[Partition(lam)] += sign > 0 ? c : -c;
  }
  const LaurentPoly v = hl_normalizer(mu, n);
  std::map<Partition, LaurentPoly> out;
  for (auto& [lam, c] : numer)
    if (!c.is_zero()) out.emplace(lam, c.exact_divide(v));
  return out;
}

inline MonomialExpansion combine_schur(const std::map<Partition, Rational>& schur_coeffs, int n) {
  MonomialExpansion out;
  for (const auto& [lam, c] : schur_coeffs) {
    if (c == 0) continue;
    for (const auto& [m, k] : schur_expansion(lam, n)) out[m] += c * k;
  }
  std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
  return out;
}

/// Monomial expansion of P_mu(x_1..x_n; q0).
inline MonomialExpansion hall_littlewood_eval(const Partition& mu, int n, const Rational& q0) {
  std::map<Partition, Rational> at;
  for (const auto& [lam, c] : hall_littlewood_schur(mu, n)) at[lam] = c.evaluate(q0);
  return combine_schur(at, n);
}

inline std::string to_string(const Rational& r) {
  return r.str();
}

struct IdentityCheck {
  std::string identity;  // "schur-monomial" | "schur-hl" | "h-schur" | "e-schur" | "hl-at-one"
  Partition lambda;
  Partition mu;  // empty when the identity is stated for lambda alone
  std::optional<Rational> qpoint;
  bool ok = true;
  std::string detail;  // first violated coefficient when !ok
};

/// Evaluation points used by default: 0, 1, 2, ... enough of them to certify
/// every identity of size m in n variables as a polynomial identity in q.
inline std::vector<Rational> default_qpoints(int m, int n) {
  int degree = 0;
  for (const auto& lam : partitions_of(m, n))
    for (const auto& mu : partitions_of(m, n)) {
      const auto k = kostka_poly(lam, mu, KostkaMethod::Charge);
      int pdeg = 0;
      for (const auto& [s, c] : hall_littlewood_schur(mu, n)) pdeg = std::max(pdeg, c.max_degree().value_or(0));
      degree = std::max(degree, k.max_degree().value_or(0) + pdeg);
    }
  std::vector<Rational> pts;
  for (int k = 0; k <= degree; ++k) pts.emplace_back(k);
  return pts;
}

namespace detail {

inline std::string first_difference(const MonomialExpansion& lhs, const MonomialExpansion& rhs) {
  std::map<Partition, Rational> diff = lhs;
  for (const auto& [m, c] : rhs) diff[m] -= c;
  for (const auto& [m, c] : diff)
    if (c != 0) return "m" + m.to_string() + ": differs by " + c.str();
  return {};
}

}  // namespace detail

/// Checks, for all partitions of m with at most n parts:
///   s_lambda = sum_mu K_{lambda mu}(q0) P_mu(x; q0)   at every q-point,
///   h_mu = sum_lambda K_{lambda mu} s_lambda,  e_mu = sum_lambda K_{lambda mu} s_{lambda'},
///   the m_mu coefficient of s_lambda is the Kostka number,  P_mu(x; 1) = m_mu.
inline std::vector<IdentityCheck> check_identities(int m, int n, const std::vector<Rational>& qpoints) {
  if (m < 0 || n < 1) throw std::domain_error("check_identities: need m >= 0 and n >= 1");
  std::vector<IdentityCheck> report;
  const auto parts_n = partitions_of(m, n);
  const auto parts_all = partitions_of(m);

  std::map<Partition, MonomialExpansion> schur;
  for (const auto& lam : parts_n) schur[lam] = schur_expansion(lam, n);
  std::map<Partition, std::map<Partition, LaurentPoly>> hl;
  for (const auto& mu : parts_n) hl[mu] = hall_littlewood_schur(mu, n);

  for (const auto& lam : parts_n) {
    IdentityCheck c{"schur-monomial", lam, {}, std::nullopt, true, {}};
    for (const auto& mu : parts_n) {
      const Rational want = static_cast<long long>(kostka_number(lam, mu));
      auto it = schur[lam].find(mu);
      const Rational got = it == schur[lam].end() ? Rational(0) : it->second;
      if (got != want && c.ok) {
        c.ok = false;
        c.detail = "m" + mu.to_string() + ": " + got.str() + " vs " + want.str();
      }
    }
    report.push_back(std::move(c));
  }

  for (const auto& mu : parts_n) {
    std::map<Partition, Rational> at_one;
    for (const auto& [s, c] : hl[mu]) at_one[s] = c.evaluate(Rational(1));
    MonomialExpansion want{{mu, Rational(1)}};
    const auto diff = detail::first_difference(combine_schur(at_one, n), want);
    report.push_back({"hl-at-one", mu, {}, Rational(1), diff.empty(), diff});
  }

  for (const auto& lam : parts_n) {
    std::map<Partition, LaurentPoly> kp;
    for (const auto& mu : parts_n) kp[mu] = kostka_poly(lam, mu, KostkaMethod::Charge);
    for (const auto& q0 : qpoints) {
      std::map<Partition, Rational> schur_coeffs;
      for (const auto& mu : parts_n) {
        const Rational k = kp[mu].evaluate(q0);
        if (k == 0) continue;
        for (const auto& [s, c] : hl[mu]) schur_coeffs[s] += k * c.evaluate(q0);
      }
      const auto diff = detail::first_difference(schur[lam], combine_schur(schur_coeffs, n));
      report.push_back({"schur-hl", lam, {}, q0, diff.empty(), diff});
    }
  }

  auto schur_of = [&](const Partition& p) -> MonomialExpansion {
    if (p.length() > n) return {};
    return schur.count(p) ? schur[p] : schur_expansion(p, n);
  };
  for (const auto& mu : parts_all) {
    MonomialExpansion hsum, esum;
    for (const auto& lam : parts_all) {
      const auto k = kostka_number(lam, mu);
      if (k == 0) continue;
      for (const auto& [x, c] : schur_of(lam)) hsum[x] += c * k;
      for (const auto& [x, c] : schur_of(lam.conjugate())) esum[x] += c * k;
    }
    std::erase_if(hsum, [](const auto& kv) { return kv.second == 0; });
    std::erase_if(esum, [](const auto& kv) { return kv.second == 0; });
    const auto hd = detail::first_difference(detail::dominant_coefficients(complete_product(mu, n)), hsum);
    report.push_back({"h-schur", {}, mu, std::nullopt, hd.empty(), hd});
    const auto ed = detail::first_difference(detail::dominant_coefficients(elementary_product(mu, n)), esum);
    report.push_back({"e-schur", {}, mu, std::nullopt, ed.empty(), ed});
  }
  return report;
}

}  // namespace crystal
