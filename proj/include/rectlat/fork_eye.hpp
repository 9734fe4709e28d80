#pragma once

#include <utility>
#include <vector>

#include "rectlat/congruence.hpp"
#include "rectlat/planar.hpp"

namespace rectlat {

/// A covering square: o covered by l and r, both covered by t, with l and r
/// adjacent in the upper cover order of o and l to the left of r.
struct CoveringSquare {
  Elem o = 0, l = 0, r = 0, t = 0;
  bool operator==(const CoveringSquare&) const = default;
};

/// All covering squares, ordered by (o, position of l).
std::vector<CoveringSquare> covering_squares(const PlanarDiagram& d);

/// Validates the four elements as a covering square of d.
CoveringSquare square_at(const PlanarDiagram& d, Elem o, Elem l, Elem r, Elem t);

/// Eyes: doubly-irreducible elements x whose cover interval [u, w] has
/// length two and contains another interior element besides x.
std::vector<Elem> eyes(const PlanarDiagram& d);
bool is_slim(const PlanarDiagram& d);

struct EyeInsertion {
  PlanarDiagram diagram;
  Embedding embedding;
  Elem eye;
};

/// Adds one doubly-irreducible element inside a covering square, between l
/// and r in the diagram. No cover of an old element is removed.
EyeInsertion insert_eye(const PlanarDiagram& d, const CoveringSquare& s);

struct EyeRemoval {
  PlanarDiagram diagram;
  std::vector<Elem> old_to_new;  // -1 for the removed element
};

/// Deletes an eye and renumbers densely.
EyeRemoval remove_eye(const PlanarDiagram& d, Elem eye);

/// Removes eyes until none remain (lowest id first).
PlanarDiagram slim_down(const PlanarDiagram& d);

struct ForkResult {
  PlanarDiagram diagram;
  Embedding embedding;
  std::vector<Elem> new_elements;  // first the three square replacements, then
                                   // the left descent, then the right descent
  IntervalRef left_terminal;       // boundary prime interval ending the left descent
  IntervalRef right_terminal;
};

/// Fork insertion at a covering square of a slim diagram: the square is
/// replaced by a seven-element configuration, then new elements propagate
/// down-left and down-right through the covering squares below until they
/// reach the boundary.
ForkResult insert_fork(const PlanarDiagram& d, const CoveringSquare& s);

/// Number of join-irreducible congruences before and after a fork insertion.
std::pair<int, int> count_ji_congruences_delta(const PlanarDiagram& d, const CoveringSquare& s);

}  // namespace rectlat
