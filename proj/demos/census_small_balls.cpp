// Censuses the schemes of a few small balls and prints how often manifolds
// and distinguished polyhedra show up.

#include <iostream>

#include "pif/catalog.hpp"

int main() {
  struct Entry {
    const char* name;
    pif::CellDividedBall ball;
  };
  std::vector<Entry> balls;
  for (int p = 2; p <= 5; ++p)
    balls.push_back({"lens ball", pif::lens_ball(p)});
  balls.push_back({"cube", pif::cube_ball()});
  balls.push_back({"octahedron", pif::octahedron_ball()});

  for (auto& e : balls) {
    pif::SearchReport rep = pif::search_schemes(e.ball);
    std::cout << e.name << " [" << rep.ball_description << "]\n"
              << "  schemes: " << rep.total_schemes << "  manifolds: " << rep.manifold_count
              << "  distinguished: " << rep.distinguished_count << "\n";
  }
  return 0;
}
