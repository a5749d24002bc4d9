#pragma once

// Sparse Laurent polynomials in q with integer coefficients.

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>

namespace crystal {

class LaurentPoly {
 public:
  using Coefficient = std::int64_t;

  LaurentPoly() = default;

  static LaurentPoly monomial(int exponent, Coefficient c = 1) {
    LaurentPoly p;
    if (c != 0) p.coeffs_[exponent] = c;
    return p;
  }
  static LaurentPoly constant(Coefficient c) { return monomial(0, c); }

  const std::map<int, Coefficient>& coefficients() const noexcept { return coeffs_; }

  Coefficient coefficient(int exponent) const {
    auto it = coeffs_.find(exponent);
    return it == coeffs_.end() ? 0 : it->second;
  }

  bool is_zero() const noexcept { return coeffs_.empty(); }
  std::optional<int> min_degree() const {
    if (coeffs_.empty()) return std::nullopt;
    return coeffs_.begin()->first;
  }
  std::optional<int> max_degree() const {
    if (coeffs_.empty()) return std::nullopt;
    return coeffs_.rbegin()->first;
  }

  void add_term(int exponent, Coefficient c) {
    if (c == 0) return;
    auto [it, inserted] = coeffs_.try_emplace(exponent, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) coeffs_.erase(it);
    }
  }

  LaurentPoly& operator+=(const LaurentPoly& o) {
    for (auto [e, c] : o.coeffs_) add_term(e, c);
    return *this;
  }
  LaurentPoly& operator-=(const LaurentPoly& o) {
    for (auto [e, c] : o.coeffs_) add_term(e, -c);
    return *this;
  }
  LaurentPoly& operator*=(const LaurentPoly& o) {
    *this = *this * o;
    return *this;
  }
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    LaurentPoly r;
    for (auto [e1, c1] : a.coeffs_)
      for (auto [e2, c2] : b.coeffs_) r.add_term(e1 + e2, c1 * c2);
    return r;
  }
  friend LaurentPoly operator-(LaurentPoly a) {
    for (auto& [e, c] : a.coeffs_) c = -c;
    return a;
  }

  /// Multiplication by q^shift.
  LaurentPoly shifted(int shift) const {
    LaurentPoly r;
    for (auto [e, c] : coeffs_) r.coeffs_.emplace(e + shift, c);
    return r;
  }

  /// The substitution q -> 1/q.
  LaurentPoly inverted() const {
    LaurentPoly r;
    for (auto [e, c] : coeffs_) r.coeffs_.emplace(-e, c);
    return r;
  }

  Coefficient at_one() const noexcept {
    Coefficient s = 0;
    for (auto [e, c] : coeffs_) s += c;
    return s;
  }

  bool has_nonnegative_coefficients() const noexcept {
    for (auto [e, c] : coeffs_)
      if (c < 0) return false;
    return true;
  }

  /// Evaluation at q in any field-like type R (exact rationals in practice).
  template <class R>
  R evaluate(const R& q) const {
    R result(0);
    for (auto [e, c] : coeffs_) {
      R term(1);
      R base = e >= 0 ? q : R(1) / q;
      for (int k = 0, m = e >= 0 ? e : -e; k < m; ++k) term *= base;
      result += R(c) * term;
    }
    return result;
  }

  /// Exact division by a polynomial with nonnegative exponents and leading
  /// coefficient +-1. Throws if the division leaves a remainder.
  LaurentPoly exact_divide(const LaurentPoly& divisor) const {
    if (divisor.is_zero()) throw std::domain_error("LaurentPoly: division by zero");
    const int dlead = *divisor.max_degree();
    const Coefficient lc = divisor.coefficient(dlead);
    if (lc != 1 && lc != -1) throw std::domain_error("LaurentPoly: divisor must be monic up to sign");
    LaurentPoly rem = *this;
    LaurentPoly quot;
    const int dlow = *divisor.min_degree();
    while (!rem.is_zero() && *rem.max_degree() - dlead >= *rem.min_degree() - dlow) {
      const int e = *rem.max_degree() - dlead;
      const Coefficient c = rem.coefficient(*rem.max_degree()) * lc;
      quot.add_term(e, c);
      rem -= divisor.shifted(e) * constant(c);
    }
    if (!rem.is_zero()) throw std::domain_error("LaurentPoly: inexact division");
    return quot;
  }

  /// Human-readable form, ascending exponents: "1 + q^2 - 3q^-1" style.
  std::string to_string(const std::string& var = "q") const {
    if (coeffs_.empty()) return "0";
    std::string s;
    bool first = true;
    for (auto [e, c] : coeffs_) {
      Coefficient mag = c < 0 ? -c : c;
      if (first) {
        if (c < 0) s += "-";
      } else {
        s += c < 0 ? " - " : " + ";
      }
      first = false;
      if (e == 0) {
        s += std::to_string(mag);
        continue;
      }
      if (mag != 1) s += std::to_string(mag);
      s += var;
      if (e != 1) s += "^" + std::to_string(e);
    }
    return s;
  }

  friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;

 private:
  std::map<int, Coefficient> coeffs_;
};

}  // namespace crystal
