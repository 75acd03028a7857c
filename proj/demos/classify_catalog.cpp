// Classifies the classical catalog entries and prints the reports.

#include <iostream>

#include "pif/catalog.hpp"
#include "pif/report.hpp"

int main() {
  std::vector<pif::Polyhedron> entries = {
      pif::lens(1, 0),  pif::lens(2, 1),
      pif::lens(5, 2),  pif::cube_twist(pif::CubeTwist::None),
      pif::cube_twist(pif::CubeTwist::Quarter), pif::cube_twist(pif::CubeTwist::Half),
      pif::dodecahedral_space(), pif::annulus_loop(3),
  };
  for (const auto& p : entries) {
    std::cout << pif::classify_text(pif::classify(p)) << "\n";
  }
  return 0;
}
