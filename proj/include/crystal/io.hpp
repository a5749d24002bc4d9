#pragma once

// Text formats: comma-list parsing, JSON objects, energy CSV and Graphviz DOT.

#include <charconv>
#include <cstdint>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "crystal/crystal_core.hpp"
#include "crystal/laurent_poly.hpp"
#include "crystal/partition.hpp"
#include "crystal/paths.hpp"
#include "crystal/rmatrix.hpp"
#include "crystal/symfunc.hpp"
#include "crystal/tableau.hpp"

namespace crystal::io {

using Json = nlohmann::ordered_json;

// ---- parsing -------------------------------------------------------------

/// "5,4,2" -> {5,4,2}. Empty input gives an empty list.
inline std::vector<int> parse_int_list(std::string_view s) {
  std::vector<int> out;
  if (s.empty()) return out;
  std::size_t pos = 0;
  while (true) {
    const std::size_t comma = s.find(',', pos);
    const std::string_view tok = s.substr(pos, comma == std::string_view::npos ? s.size() - pos : comma - pos);
    int v = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (tok.empty() || ec != std::errc() || ptr != tok.data() + tok.size())
      throw std::invalid_argument("expected a comma separated list of integers, got '" + std::string(s) + "'");
    out.push_back(v);
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return out;
}

inline Partition parse_partition(std::string_view s) { return Partition(parse_int_list(s)); }

inline CrystalElement parse_element(Flavor flavor, int n, std::string_view s) {
  return CrystalElement(flavor, n, parse_int_list(s));
}

/// "1,3,5:2,3" -> [1,3,5] (x) [2,3].
inline TensorWord parse_word(Flavor flavor, int n, std::string_view s) {
  std::vector<CrystalElement> factors;
  std::size_t pos = 0;
  while (true) {
    const std::size_t colon = s.find(':', pos);
    factors.push_back(
        parse_element(flavor, n, s.substr(pos, colon == std::string_view::npos ? s.size() - pos : colon - pos)));
    if (colon == std::string_view::npos) break;
    pos = colon + 1;
  }
  return TensorWord(std::move(factors));
}

/// "3" -> {3,3}; "1..3" -> {1,3}.
inline std::pair<int, int> parse_range(std::string_view s) {
  const std::size_t dots = s.find("..");
  auto one = [&](std::string_view t) {
    int v = 0;
    auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
    if (t.empty() || ec != std::errc() || ptr != t.data() + t.size())
      throw std::invalid_argument("expected N or A..B, got '" + std::string(s) + "'");
    return v;
  };
  if (dots == std::string_view::npos) {
    const int v = one(s);
    return {v, v};
  }
  const auto r = std::pair{one(s.substr(0, dots)), one(s.substr(dots + 2))};
  if (r.first > r.second) throw std::invalid_argument("empty range '" + std::string(s) + "'");
  return r;
}

// ---- JSON ----------------------------------------------------------------

inline Json to_json(const Partition& p) { return Json(p.parts()); }
inline Json to_json(const CrystalElement& b) { return Json(b.entry_vector()); }

inline Json to_json(const TensorWord& w) {
  Json a = Json::array();
  for (const auto& b : w.factors()) a.push_back(to_json(b));
  return a;
}

inline Json to_json(const CrystalElement& b1, const CrystalElement& b2, const RResult& r) {
  return Json{{"b1", to_json(b1)}, {"b2", to_json(b2)}, {"b2p", to_json(r.out_left)},
              {"b1p", to_json(r.out_right)}, {"H", r.energy}};
}

/// {"e": c, ...} with exponents ascending.
inline Json to_json(const LaurentPoly& p) {
  Json o = Json::object();
  for (auto [e, c] : p.coefficients()) o[std::to_string(e)] = c;
  return o;
}

/// Rows of the tableau; inner cells of a skew shape are null.
inline Json to_json(const Tableau& t) {
  Json rows = Json::array();
  for (int r = 0; r < t.shape().rows(); ++r) {
    Json row = Json::array();
    for (int c = 0; c < t.shape().row_end(r); ++c) {
      if (c < t.shape().row_begin(r)) row.push_back(nullptr);
      else row.push_back(t.value(r, c));
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

inline Json to_json(const PassThroughDiagram& d) {
  Json inter = Json::array(), outs = Json::array();
  for (const auto& b : d.intermediates) inter.push_back(to_json(b));
  for (const auto& b : d.outputs) outs.push_back(to_json(b));
  return Json{{"intermediates", inter}, {"outputs", outs}, {"energies", d.energies}};
}

inline Json to_json(const IdentityCheck& c) {
  Json o{{"identity", c.identity}};
  if (!c.lambda.empty() || c.mu.empty()) o["lambda"] = to_json(c.lambda);
  if (!c.mu.empty()) o["mu"] = to_json(c.mu);
  o["qpoint"] = c.qpoint ? Json(c.qpoint->str()) : Json(nullptr);
  o["status"] = c.ok ? "pass" : "fail";
  if (!c.ok) o["detail"] = c.detail;
  return o;
}

inline Json to_json(const BranchingTable& t) {
  Json rows = Json::array();
  for (const auto& r : t.rows) {
    Json row{{"N", r.N},
             {"A_N", r.a_norm},
             {"lambda_N", r.lambda_N ? to_json(*r.lambda_N) : Json(nullptr)},
             {"mu_N", to_json(r.mu_N)},
             {"poly", to_json(r.normalized)},
             {"coeffs", r.coeffs},
             {"stable_upto", r.stable_upto ? Json(*r.stable_upto) : Json(nullptr)}};
    rows.push_back(std::move(row));
  }
  return Json{{"flavor", std::string(to_string(t.flavor))},
              {"n", t.rank},
              {"k", t.level},
              {"i", t.residue},
              {"lambda", to_json(t.lambda)},
              {"deg", t.degree_cut},
              {"rows", rows}};
}

// ---- CSV and DOT -----------------------------------------------------------

inline std::string energy_csv(const EnergyTable& table) {
  std::ostringstream os;
  os << "b1,b2,H\n";
  for (const auto& e : table.entries()) os << e.b1.label() << ',' << e.b2.label() << ',' << e.result.energy << '\n';
  return os.str();
}

/// One line per N: N,A_N,stable_upto,c0,c1,...,cD.
inline std::string branching_csv(const BranchingTable& t) {
  std::ostringstream os;
  os << "N,A_N,stable_upto";
  for (int d = 0; d <= t.degree_cut; ++d) os << ",q" << d;
  os << '\n';
  for (const auto& r : t.rows) {
    os << r.N << ',' << r.a_norm << ',';
    if (r.stable_upto) os << *r.stable_upto;
    for (auto c : r.coeffs) os << ',' << c;
    os << '\n';
  }
  return os.str();
}

inline std::string dot_escape(const std::string& s) {
  std::string out;
  for (char ch : s) {
    if (ch == '"' || ch == '\\') out += '\\';
    out += ch;
  }
  return out;
}

inline std::string to_dot(const CrystalGraph& g, const std::string& name = "crystal") {
  std::ostringstream os;
  os << "digraph " << name << " {\n";
  for (std::size_t v = 0; v < g.nodes.size(); ++v)
    os << "  n" << v << " [label=\"" << dot_escape(g.nodes[v].label()) << "\"];\n";
  for (const auto& a : g.arrows)
    os << "  n" << a.source << " -> n" << a.target << " [label=\"" << a.color << "\"];\n";
  os << "}\n";
  return os.str();
}

}  // namespace crystal::io
