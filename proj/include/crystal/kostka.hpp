#pragma once

// (Skew) Kostka polynomials by three routes: the charge statistic, and sums of
// column or row energies along the pass-through diagrams of highest words.

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include "crystal/crystal_core.hpp"
#include "crystal/laurent_poly.hpp"
#include "crystal/partition.hpp"
#include "crystal/rmatrix.hpp"
#include "crystal/tableau.hpp"

namespace crystal {

enum class KostkaMethod { Charge, EnergyColumn, EnergyRow };

inline std::string_view to_string(KostkaMethod m) noexcept {
  switch (m) {
    case KostkaMethod::Charge: return "charge";
    case KostkaMethod::EnergyColumn: return "energy-col";
    case KostkaMethod::EnergyRow: return "energy-row";
  }
  return "?";
}

inline KostkaMethod parse_kostka_method(std::string_view s) {
  if (s == "charge") return KostkaMethod::Charge;
  if (s == "energy-col" || s == "energy-column") return KostkaMethod::EnergyColumn;
  if (s == "energy-row") return KostkaMethod::EnergyRow;
  throw std::invalid_argument("unknown method '" + std::string(s) + "' (expected charge|energy-col|energy-row)");
}

namespace detail {

// Signed energy sum for component i (1-based) among the factors after `skip`.
inline int index_from_energies(const TensorWord& w, std::size_t i, std::size_t skip) {
  std::span<const CrystalElement> body(w.factors());
  body = body.subspan(skip);
  const int s = pass_through(body, i).energy_sum();
  return w.flavor() == Flavor::Column ? -s : s;
}

}  // namespace detail

/// LS index of component i (1-based) of a highest word through energies:
/// minus the column energy sum, or plus the row energy sum, along the
/// pass-through diagram of factor i. `skip` leading factors (the inner shape
/// prefix of a skew word) take no part in the pass-through.
inline int index_via_energy(const TensorWord& w, std::size_t i, std::size_t skip = 0) {
  if (!is_highest(w)) throw std::domain_error("index_via_energy: word is not highest weight");
  if (skip >= w.length() || i < 1 || i > w.length() - skip)
    throw std::out_of_range("index_via_energy: component index out of range");
  for (std::size_t j = skip + 1; j < w.length(); ++j)
    if (w[j].size() > w[j - 1].size())
      throw std::domain_error("index_via_energy: factor sizes must weakly decrease");
  return detail::index_from_energies(w, i, skip);
}

inline LaurentPoly kostka_poly(const SkewShape& shape, const Partition& mu, KostkaMethod method,
                               std::optional<int> rank = std::nullopt) {
  if (shape.size() != mu.size())
    throw std::domain_error("kostka_poly: |shape| = " + std::to_string(shape.size()) +
                            " but |mu| = " + std::to_string(mu.size()));
  LaurentPoly result;
  if (shape.size() == 0) return LaurentPoly::constant(1);
  if (method == KostkaMethod::Charge) {
    for (const auto& t : enumerate_tableaux(shape, mu)) result.add_term(charge(t), 1);
    return result;
  }
  const Flavor flavor = method == KostkaMethod::EnergyColumn ? Flavor::Column : Flavor::Row;
  const int n = rank.value_or(minimal_rank(flavor, shape.outer()));
  const auto skip = static_cast<std::size_t>(shape.inner().length());
  for (const auto& t : enumerate_tableaux(shape, mu)) {
    const TensorWord w = tableau_to_word(t, flavor, n);
    int exponent = 0;
    for (std::size_t i = 1; i + skip <= w.length(); ++i) exponent += detail::index_from_energies(w, i, skip);
    result.add_term(exponent, 1);
  }
  return result;
}

inline LaurentPoly kostka_poly(const Partition& lambda, const Partition& mu, KostkaMethod method,
                               std::optional<int> rank = std::nullopt) {
  return kostka_poly(SkewShape(lambda), mu, method, rank);
}

inline std::int64_t kostka_number(const SkewShape& shape, const Partition& mu) {
  return static_cast<std::int64_t>(enumerate_tableaux(shape, mu).size());
}

inline std::int64_t kostka_number(const Partition& lambda, const Partition& mu) {
  return kostka_number(SkewShape(lambda), mu);
}

}  // namespace crystal
