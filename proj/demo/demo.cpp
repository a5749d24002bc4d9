// Small tour of the library: one R-matrix image, one Kostka polynomial by
// three routes, and a short branching table.

#include <iostream>

#include "crystal/crystal.hpp"

int main() {
  using namespace crystal;

  const CrystalElement b1(Flavor::Row, 3, {2, 2, 3});
  const CrystalElement b2(Flavor::Row, 3, {1, 2});
  const RResult r = r_map(b1, b2);
  std::cout << b1.label() << " (x) " << b2.label() << " -> " << r.out_left.label() << " (x) "
            << r.out_right.label() << ", H = " << r.energy << "\n\n";

  const Partition lambda({5, 4, 2}), mu({3, 3, 2, 2, 1});
  for (auto m : {KostkaMethod::Charge, KostkaMethod::EnergyColumn, KostkaMethod::EnergyRow})
    std::cout << to_string(m) << ": K = " << kostka_poly(lambda, mu, m).to_string() << '\n';

  std::cout << "\nrow paths, n = 2, k = 1, i = 0, weight (1,1):\n";
  const auto table = branching_table(Flavor::Row, Partition({1, 1}), 2, 1, 0, 0, 3, 6);
  for (const auto& row : table.rows) std::cout << "  N = " << row.N << ": " << row.normalized.to_string() << '\n';
  return 0;
}
