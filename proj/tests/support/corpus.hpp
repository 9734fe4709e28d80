#pragma once

#include <string>
#include <vector>

#include "rectlat/fork_eye.hpp"
#include "rectlat/planar.hpp"

namespace rectlat::testing {

struct ForkEvent {
  PlanarDiagram before;
  CoveringSquare square;
  ForkResult result;
};

struct EyeEvent {
  PlanarDiagram before;
  CoveringSquare square;
  EyeInsertion result;
};

struct CorpusEntry {
  std::string name;
  PlanarDiagram diagram;
  std::vector<ForkEvent> forks;
  std::vector<EyeEvent> eyes;
};

/// Deterministic corpus of rectangular lattices: all grids up to 4x4, the
/// fork core, and randomly grown lattices (grid, then up to 3 forks, then up
/// to 2 eyes), capped at 60 elements. Fixed seed, same corpus on every run.
std::vector<CorpusEntry> build_corpus(int min_count = 50);

}  // namespace rectlat::testing
