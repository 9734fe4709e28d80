#include "corpus.hpp"

#include <random>

#include "fixtures.hpp"

namespace rectlat::testing {

namespace {

CorpusEntry grow(const std::string& name, PlanarDiagram seed, int fork_count, int eye_count,
                 std::mt19937& rng) {
  CorpusEntry entry{name, seed, {}, {}};
  for (int i = 0; i < fork_count; ++i) {
    auto squares = covering_squares(entry.diagram);
    CoveringSquare s = squares[rng() % squares.size()];
    ForkResult result = insert_fork(entry.diagram, s);
    if (result.diagram.size() > 60) return entry;
    entry.forks.push_back(ForkEvent{entry.diagram, s, result});
    entry.diagram = result.diagram;
  }
  for (int i = 0; i < eye_count; ++i) {
    auto squares = covering_squares(entry.diagram);
    CoveringSquare s = squares[rng() % squares.size()];
    EyeInsertion result = insert_eye(entry.diagram, s);
    if (result.diagram.size() > 60) return entry;
    entry.eyes.push_back(EyeEvent{entry.diagram, s, result});
    entry.diagram = result.diagram;
  }
  return entry;
}

}  // namespace

std::vector<CorpusEntry> build_corpus(int min_count) {
  std::vector<CorpusEntry> corpus;
  for (int m = 2; m <= 4; ++m)
    for (int n = 2; n <= 4; ++n)
      corpus.push_back(CorpusEntry{"grid" + std::to_string(m) + "x" + std::to_string(n),
                                   grid(m, n),
                                   {},
                                   {}});
  corpus.push_back(CorpusEntry{"s7", make_s7(), {}, {}});

  std::mt19937 rng(20240809u);
  int counter = 0;
  while (static_cast<int>(corpus.size()) < min_count) {
    int m = 2 + static_cast<int>(rng() % 3);
    int n = 2 + static_cast<int>(rng() % 3);
    int forks = static_cast<int>(rng() % 4);
    int eyes = static_cast<int>(rng() % 3);
    corpus.push_back(
        grow("random" + std::to_string(counter++), grid(m, n), forks, eyes, rng));
  }
  return corpus;
}

}  // namespace rectlat::testing
