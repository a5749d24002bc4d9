// crystal-kostka: command line front end.
//
// Exit codes: 0 success, 1 internal failure (a disagreement or a broken
// invariant), 2 bad arguments or inputs outside a precondition, 3 a node cap
// was exceeded.

#include <cstdlib>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "crystal/crystal.hpp"
#include "crystal/io.hpp"

namespace {

using namespace crystal;
using io::Json;

enum class Format { Pretty, Json, Csv, Dot };

Format parse_format(const std::string& s) {
  if (s == "pretty") return Format::Pretty;
  if (s == "json") return Format::Json;
  if (s == "csv") return Format::Csv;
  if (s == "dot") return Format::Dot;
  throw std::invalid_argument("unknown format '" + s + "'");
}

void print_json(const Json& j) { std::cout << j.dump(2) << '\n'; }

// ---- kostka ------------------------------------------------------------------

struct KostkaArgs {
  std::string lambda, nu, mu, method = "charge", format = "pretty";
  bool all = false;
  std::optional<int> rank;
};

int run_kostka(const KostkaArgs& a) {
  const SkewShape shape(io::parse_partition(a.lambda), io::parse_partition(a.nu));
  const Partition mu = io::parse_partition(a.mu);
  const Format fmt = parse_format(a.format);
  if (fmt != Format::Pretty && fmt != Format::Json) throw std::invalid_argument("kostka supports pretty|json");

  std::vector<KostkaMethod> methods;
  if (a.all) methods = {KostkaMethod::Charge, KostkaMethod::EnergyColumn, KostkaMethod::EnergyRow};
  else methods = {parse_kostka_method(a.method)};

  std::vector<LaurentPoly> polys;
  for (auto m : methods) polys.push_back(kostka_poly(shape, mu, m, m == KostkaMethod::Charge ? std::nullopt : a.rank));
  bool agree = true;
  for (const auto& p : polys) agree = agree && p == polys.front();

  auto base = [&] {
    return Json{{"lambda", io::to_json(shape.outer())}, {"nu", io::to_json(shape.inner())}, {"mu", io::to_json(mu)}};
  };
  if (fmt == Format::Json) {
    if (!a.all) {
      Json j = base();
      j["method"] = std::string(to_string(methods[0]));
      j["poly"] = io::to_json(polys[0]);
      print_json(j);
    } else {
      Json j = base();
      Json results = Json::array();
      for (std::size_t k = 0; k < methods.size(); ++k)
        results.push_back(Json{{"method", std::string(to_string(methods[k]))}, {"poly", io::to_json(polys[k])}});
      j["results"] = results;
      j["agree"] = agree;
      print_json(j);
    }
  } else if (!a.all) {
    std::cout << polys[0].to_string() << '\n';
  } else {
    for (std::size_t k = 0; k < methods.size(); ++k)
      std::cout << std::left << std::setw(12) << to_string(methods[k]) << polys[k].to_string() << '\n';
    std::cout << std::left << std::setw(12) << "agreement" << (agree ? "yes" : "NO") << '\n';
  }
  if (!agree) {
    std::cerr << "error: the three methods disagree\n";
    return 1;
  }
  return 0;
}

// ---- energy ------------------------------------------------------------------

struct EnergyArgs {
  std::string flavor, pair, word, format;
  int n = 0;
  std::optional<int> k, l;
  std::optional<int> component;
};

int run_energy(const EnergyArgs& a) {
  const Flavor flavor = parse_flavor(a.flavor);
  const int modes = !a.pair.empty() + !a.word.empty() + (a.k.has_value() || a.l.has_value());
  if (modes != 1) throw std::invalid_argument("energy: give exactly one of --pair, --word, or --k with --l");

  if (!a.pair.empty()) {
    const TensorWord w = io::parse_word(flavor, a.n, a.pair);
    if (w.length() != 2) throw std::invalid_argument("energy: --pair needs exactly two factors b1:b2");
    const RResult r = r_map(w[0], w[1]);
    const Format fmt = parse_format(a.format.empty() ? "pretty" : a.format);
    if (fmt == Format::Json) print_json(io::to_json(w[0], w[1], r));
    else if (fmt == Format::Pretty)
      std::cout << w[0].label() << " ⊗ " << w[1].label() << " -> " << r.out_left.label() << " ⊗ "
                << r.out_right.label() << "  H = " << r.energy << '\n';
    else throw std::invalid_argument("energy --pair supports pretty|json");
    return 0;
  }

  if (!a.word.empty()) {
    const TensorWord w = io::parse_word(flavor, a.n, a.word);
    if (!a.component) throw std::invalid_argument("energy: --word needs --component");
    const auto d = pass_through(w, static_cast<std::size_t>(*a.component));
    const Format fmt = parse_format(a.format.empty() ? "pretty" : a.format);
    if (fmt == Format::Json) {
      Json j = io::to_json(d);
      j["word"] = io::to_json(w);
      j["component"] = *a.component;
      j["energy_sum"] = d.energy_sum();
      print_json(j);
    } else if (fmt == Format::Pretty) {
      // b_i^{(1)} -h_1- b_i^{(2)} -h_2- ... -h_{i-1}- b_i, outputs above, inputs below
      std::cout << "through:";
      for (std::size_t m = d.intermediates.size(); m-- > 0;) std::cout << ' ' << d.intermediates[m].label();
      std::cout << "\nbelow:  ";
      for (int j = 0; j + 1 < *a.component; ++j) std::cout << ' ' << w[static_cast<std::size_t>(j)].label();
      std::cout << "\nabove:  ";
      for (const auto& b : d.outputs) std::cout << ' ' << b.label();
      std::cout << "\nH:      ";
      for (int h : d.energies) std::cout << ' ' << h;
      std::cout << "\nsum:     " << d.energy_sum() << '\n';
    } else {
      throw std::invalid_argument("energy --word supports pretty|json");
    }
    return 0;
  }

  if (!a.k || !a.l) throw std::invalid_argument("energy: table mode needs both --k and --l");
  const EnergyTable table(flavor, a.n, *a.k, *a.l);
  const Format fmt = parse_format(a.format.empty() ? "csv" : a.format);
  if (fmt == Format::Csv) {
    std::cout << io::energy_csv(table);
  } else if (fmt == Format::Json) {
    Json rows = Json::array();
    for (const auto& e : table.entries()) rows.push_back(io::to_json(e.b1, e.b2, e.result));
    print_json(rows);
  } else if (fmt == Format::Pretty) {
    for (const auto& e : table.entries())
      std::cout << e.b1.label() << " ⊗ " << e.b2.label() << "  H = " << e.result.energy << '\n';
  } else {
    throw std::invalid_argument("energy table supports csv|json|pretty");
  }
  return 0;
}

// ---- graph -------------------------------------------------------------------

struct GraphArgs {
  std::string flavor, sizes, name = "crystal";
  int n = 0;
  bool classical = false;
  std::size_t node_cap = 100000;
};

int run_graph(const GraphArgs& a) {
  const Flavor flavor = parse_flavor(a.flavor);
  const auto sizes = io::parse_int_list(a.sizes);
  CrystalGraph g = crystal_graph(flavor, a.n, sizes, a.node_cap);
  if (a.classical) std::erase_if(g.arrows, [](const CrystalArrow& x) { return x.color == 0; });
  std::cout << io::to_dot(g, a.name);
  return 0;
}

// ---- branching -----------------------------------------------------------------

struct BranchingArgs {
  std::string flavor = "row", lambda, range = "1..3", format = "pretty", method = "charge";
  int n = 0, k = 1, i = 0, deg = 6;
  bool xcheck = false, dcs = false;
  int xk = 1;
};

int run_branching(const BranchingArgs& a) {
  const Flavor flavor = parse_flavor(a.flavor);
  const Partition lambda = io::parse_partition(a.lambda);
  const auto [from, to] = io::parse_range(a.range);
  if (from < 0) throw std::invalid_argument("branching: N must be non-negative");
  const Format fmt = parse_format(a.format);
  const KostkaMethod method = parse_kostka_method(a.method);
  const BranchingTable t = branching_table(flavor, lambda, a.n, a.k, a.i, from, to, a.deg, method);

  bool ok = true;
  std::vector<std::string> dcs_status;
  if (a.dcs) {
    for (const auto& row : t.rows) {
      const PathSpec spec{flavor, a.n, a.k, a.i, row.N};
      const bool same = one_dcs(lambda, spec) == row.normalized;
      ok = ok && same;
      dcs_status.push_back(same ? "agrees" : "DIFFERS");
    }
  }

  std::optional<LevelOneCheck> x;
  if (a.xcheck) {
    if (to < 2) throw std::invalid_argument("branching: --xcheck needs the N range to reach 2");
    if (flavor == Flavor::Row) {
      if (a.k != 1 || a.i != 0) throw std::invalid_argument("branching: --xcheck on rows needs --k 1 --i 0");
      x = level_one_crosscheck(lambda.conjugate(), a.n, a.xk, to, a.deg);
    } else {
      x = level_one_crosscheck(lambda, a.n, a.k, to, a.deg);
    }
    ok = ok && x->consistent;
  }

  if (fmt == Format::Json) {
    Json j = io::to_json(t);
    if (a.dcs)
      for (std::size_t r = 0; r < t.rows.size(); ++r) j["rows"][r]["one_dcs"] = dcs_status[r];
    if (x)
      j["xcheck"] = Json{{"row_coeffs", x->row_coeffs},
                         {"column_coeffs", x->column_coeffs},
                         {"compared_upto", x->compared_upto},
                         {"consistent", x->consistent}};
    print_json(j);
  } else if (fmt == Format::Csv) {
    std::cout << io::branching_csv(t);
  } else if (fmt == Format::Pretty) {
    std::cout << "N  A_N  stable_upto  q^0..q^" << a.deg << "   q^(-A_N) K" << '\n';
    for (std::size_t r = 0; r < t.rows.size(); ++r) {
      const auto& row = t.rows[r];
      std::ostringstream c;
      for (std::size_t d = 0; d < row.coeffs.size(); ++d) c << (d ? " " : "") << row.coeffs[d];
      std::cout << std::left << std::setw(3) << row.N << std::setw(5) << row.a_norm << std::setw(13)
                << (row.stable_upto ? std::to_string(*row.stable_upto) : "-") << std::setw(2 * (a.deg + 1) + 2)
                << c.str() << row.normalized.to_string();
      if (a.dcs) std::cout << "   1D sum " << dcs_status[r];
      std::cout << '\n';
    }
    if (x)
      std::cout << "xcheck: " << (x->consistent ? "consistent" : "INCONSISTENT") << " through q^" << x->compared_upto
                << '\n';
  } else {
    throw std::invalid_argument("branching supports pretty|json|csv");
  }
  return ok ? 0 : 1;
}

// ---- identities ----------------------------------------------------------------

struct IdentityArgs {
  int m = 4, n = 3;
  std::string qpoints, format = "pretty";
};

Rational parse_rational(const std::string& s) {
  try {
    return Rational(s);
  } catch (const std::exception&) {
    throw std::invalid_argument("expected a rational number like -1 or 3/2, got '" + s + "'");
  }
}

int run_identities(const IdentityArgs& a) {
  if (a.m < 0 || a.n < 1) throw std::invalid_argument("identities: need m >= 0 and n >= 1");
  std::vector<Rational> qs;
  if (a.qpoints.empty()) {
    qs = default_qpoints(a.m, a.n);
  } else {
    std::size_t pos = 0;
    while (pos <= a.qpoints.size()) {
      const std::size_t comma = a.qpoints.find(',', pos);
      const std::size_t end = comma == std::string::npos ? a.qpoints.size() : comma;
      qs.push_back(parse_rational(a.qpoints.substr(pos, end - pos)));
      pos = end + 1;
    }
  }
  const Format fmt = parse_format(a.format);
  const auto checks = check_identities(a.m, a.n, qs);
  bool ok = true;
  for (const auto& c : checks) ok = ok && c.ok;
  if (fmt == Format::Json) {
    Json j = Json::array();
    for (const auto& c : checks) j.push_back(io::to_json(c));
    print_json(j);
  } else if (fmt == Format::Pretty) {
    for (const auto& c : checks) {
      std::cout << (c.ok ? "pass  " : "FAIL  ") << std::left << std::setw(16) << c.identity;
      std::ostringstream args;
      if (!c.lambda.empty()) args << "lambda=" << c.lambda.to_string() << ' ';
      if (!c.mu.empty()) args << "mu=" << c.mu.to_string() << ' ';
      if (c.qpoint) args << "q=" << c.qpoint->str();
      std::string text = args.str();
      if (!text.empty() && text.back() == ' ') text.pop_back();
      std::cout << text << '\n';
      if (!c.ok) std::cout << "      " << c.detail << '\n';
    }
    std::cout << checks.size() << " checks, " << (ok ? "all pass" : "FAILURES") << '\n';
  } else {
    throw std::invalid_argument("identities supports pretty|json");
  }
  return ok ? 0 : 1;
}

// ---- verify --------------------------------------------------------------------

struct VerifyArgs {
  int max_size = 8;
  std::vector<std::string> suites;
  std::string format = "pretty";
  bool timings = false;
  std::uint64_t seed = verify::Bounds{}.seed;
};

int run_verify(const VerifyArgs& a) {
  if (a.max_size < 1) throw std::invalid_argument("verify: --max-size must be positive");
  verify::Bounds b;
  b.max_size = a.max_size;
  b.max_skew_outer = a.max_size;
  b.max_skew = std::min(6, a.max_size);
  b.sym_size = std::min(6, a.max_size);
  b.seed = a.seed;
  const Format fmt = parse_format(a.format);
  if (fmt != Format::Pretty && fmt != Format::Json) throw std::invalid_argument("verify supports pretty|json");

  auto suites = verify::all_suites();
  if (!a.suites.empty()) {
    std::vector<verify::Suite> chosen;
    for (const auto& key : a.suites) {
      auto it = std::find_if(suites.begin(), suites.end(), [&](const auto& s) { return s.key == key; });
      if (it == suites.end()) throw std::invalid_argument("verify: unknown suite '" + key + "'");
      chosen.push_back(*it);
    }
    suites = std::move(chosen);
  }

  bool ok = true;
  Json report = Json::array();
  for (const auto& s : suites) {
    const auto r = s.run(b);
    ok = ok && r.passed;
    if (fmt == Format::Json) {
      Json j{{"suite", s.key}, {"name", r.name}, {"status", r.passed ? "pass" : "fail"}, {"cases", r.cases},
             {"failures", r.failures}};
      if (!r.passed) j["first_failure"] = r.first_failure;
      if (a.timings) j["seconds"] = r.seconds;
      report.push_back(std::move(j));
    } else {
      std::cout << (r.passed ? "PASS  " : "FAIL  ") << std::left << std::setw(18) << s.key << std::setw(40) << r.name
                << "cases=" << r.cases;
      if (a.timings) std::cout << "  " << std::fixed << std::setprecision(2) << r.seconds << "s";
      std::cout << '\n';
      if (!r.passed) std::cout << "      " << r.failures << " failure(s); first: " << r.first_failure << '\n';
    }
  }
  if (fmt == Format::Json) print_json(report);
  return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Kostka polynomials, crystal energies and branching data"};
  app.name("crystal-kostka");
  app.require_subcommand(1);

  KostkaArgs ka;
  auto* kostka = app.add_subcommand("kostka", "Kostka polynomial K_{lambda/nu, mu}(q)");
  kostka->add_option("--lambda", ka.lambda, "outer shape, e.g. 5,4,2")->required();
  kostka->add_option("--nu", ka.nu, "inner shape for skew shapes");
  kostka->add_option("--mu", ka.mu, "weight, a partition")->required();
  kostka->add_option("--method", ka.method, "charge | energy-col | energy-row");
  kostka->add_flag("--all", ka.all, "run all three methods and compare");
  kostka->add_option("--rank", ka.rank, "rank for the energy methods (default: smallest valid)");
  kostka->add_option("--format", ka.format, "pretty | json");

  EnergyArgs ea;
  auto* energy = app.add_subcommand("energy", "R-matrix images and energies");
  energy->add_option("--flavor", ea.flavor, "column | row")->required();
  energy->add_option("--n", ea.n, "rank n")->required();
  energy->add_option("--pair", ea.pair, "b1:b2, e.g. 1,3,5:2,3");
  energy->add_option("--word", ea.word, "b1:b2:...:bL for a pass-through diagram");
  energy->add_option("--component", ea.component, "factor moved by --word (1-based)");
  energy->add_option("--k", ea.k, "left factor size for a full table");
  energy->add_option("--l", ea.l, "right factor size for a full table");
  energy->add_option("--format", ea.format, "pretty | json | csv");

  GraphArgs ga;
  auto* graph = app.add_subcommand("graph", "affine crystal graph of a tensor product, as DOT");
  graph->add_option("--flavor", ga.flavor, "column | row")->required();
  graph->add_option("--n", ga.n, "rank n")->required();
  graph->add_option("--sizes", ga.sizes, "factor sizes, e.g. 1,2")->required();
  graph->add_flag("--classical", ga.classical, "drop the 0-colored arrows");
  graph->add_option("--name", ga.name, "graph name");
  graph->add_option("--node-cap", ga.node_cap, "largest graph to build")->envname("CRYSTAL_NODE_CAP");

  BranchingArgs ba;
  auto* branching = app.add_subcommand("branching", "finite-N branching coefficients");
  branching->add_option("--flavor", ba.flavor, "row (default) | column");
  branching->add_option("--n", ba.n, "rank n")->required();
  branching->add_option("--k", ba.k, "level (rows) or column height");
  branching->add_option("--i", ba.i, "residue, rows only");
  branching->add_option("--lambda", ba.lambda, "weight")->required();
  branching->add_option("--N", ba.range, "N or A..B");
  branching->add_option("--deg", ba.deg, "degree cut D");
  branching->add_option("--method", ba.method, "Kostka method used");
  branching->add_flag("--dcs", ba.dcs, "also sum over highest paths and compare");
  branching->add_flag("--xcheck", ba.xcheck, "level one rows vs columns");
  branching->add_option("--xk", ba.xk, "column height on the column side of --xcheck for row input");
  branching->add_option("--format", ba.format, "pretty | json | csv");

  IdentityArgs ia;
  auto* identities = app.add_subcommand("identities", "symmetric function identities in n variables");
  identities->add_option("--m", ia.m, "degree |lambda|");
  identities->add_option("--n", ia.n, "number of variables");
  identities->add_option("--qpoints", ia.qpoints, "rational q-points, e.g. -1,3/2 (default: 0..D)");
  identities->add_option("--format", ia.format, "pretty | json");

  VerifyArgs va;
  auto* verify_cmd = app.add_subcommand("verify", "run the property suites");
  verify_cmd->add_option("--max-size", va.max_size, "largest |mu|");
  verify_cmd->add_option("--suite", va.suites, "run only these suites");
  verify_cmd->add_option("--seed", va.seed, "seed for randomized suites");
  verify_cmd->add_flag("--timings", va.timings, "report seconds per suite");
  verify_cmd->add_option("--format", va.format, "pretty | json");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }

  try {
    if (*kostka) return run_kostka(ka);
    if (*energy) return run_energy(ea);
    if (*graph) return run_graph(ga);
    if (*branching) return run_branching(ba);
    if (*identities) return run_identities(ia);
    if (*verify_cmd) return run_verify(va);
  } catch (const ResourceError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 3;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::out_of_range& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return 1;
  }
  return 1;
}
