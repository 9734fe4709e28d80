#pragma once

#include "rectlat/fork_eye.hpp"
#include "rectlat/planar.hpp"

namespace rectlat::testing {

// The four-element boolean square: 0 < {1 left, 2 right} < 3.
inline PlanarDiagram make_square() {
  Lattice l = Lattice::from_covers(4, {{0, 1}, {0, 2}, {1, 3}, {2, 3}});
  return PlanarDiagram(l, {{1, 2}, {3}, {3}, {}}, {{}, {0}, {0}, {1, 2}});
}

// The diamond: bottom 0, atoms 1 < 2 < 3 left to right, top 4.
inline PlanarDiagram make_m3() {
  Lattice l = Lattice::from_covers(5, {{0, 1}, {0, 2}, {0, 3}, {1, 4}, {2, 4}, {3, 4}});
  return PlanarDiagram(l, {{1, 2, 3}, {4}, {4}, {4}, {}}, {{}, {0}, {0}, {0}, {1, 2, 3}});
}

// The seven-element fork core with the labels used throughout the tests:
// o=0, a=1, b=2, c=3, l=4, r=5, top=6.
inline PlanarDiagram make_s7() {
  Lattice l = Lattice::from_covers(
      7, {{0, 1}, {0, 2}, {1, 3}, {2, 3}, {1, 4}, {2, 5}, {3, 6}, {4, 6}, {5, 6}});
  std::vector<std::vector<Elem>> up{{1, 2}, {4, 3}, {3, 5}, {6}, {6}, {6}, {}};
  std::vector<std::vector<Elem>> down{{}, {0}, {0}, {1, 2}, {1}, {2}, {4, 3, 5}};
  return PlanarDiagram(l, std::move(up), std::move(down));
}

// The pentagon 0 < 1 < 2 < 4, 0 < 3 < 4: not semimodular.
inline Lattice make_n5() {
  return Lattice::from_covers(5, {{0, 1}, {1, 2}, {2, 4}, {0, 3}, {3, 4}});
}

inline Lattice make_chain(int n) {
  std::vector<CoverPair> covers;
  for (Elem x = 0; x + 1 < n; ++x) covers.emplace_back(x, x + 1);
  return Lattice::from_covers(n, std::move(covers));
}

}  // namespace rectlat::testing
