#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "rectlat/lattice.hpp"

namespace rectlat {

/// A planar Hasse diagram: a lattice plus, for every element, its upper and
/// lower covers in left-to-right order.
///
/// Construction validates that the orders are permutations of the cover sets
/// and that the leftmost/rightmost maximal chains read the same upward from
/// the bottom and downward from the top (the boundary chains are
/// well-defined). Planarity itself is maintained constructively by the
/// builders in this library, never tested from scratch.
class PlanarDiagram {
 public:
  PlanarDiagram(Lattice lattice, std::vector<std::vector<Elem>> up_order,
                std::vector<std::vector<Elem>> down_order);

  /// Diagram for a lattice whose cover orders are forced (every element has
  /// at most one upper and one lower cover), e.g. a chain.
  static PlanarDiagram trivial(Lattice lattice);

  const Lattice& lattice() const { return lattice_; }
  int size() const { return lattice_.size(); }
  const std::vector<Elem>& up_order(Elem x) const { return up_order_[x]; }
  const std::vector<Elem>& down_order(Elem x) const { return down_order_[x]; }
  const std::vector<std::vector<Elem>>& up_orders() const { return up_order_; }
  const std::vector<std::vector<Elem>>& down_orders() const { return down_order_; }

  /// Leftmost maximal chain, bottom to top.
  std::vector<Elem> left_boundary() const;
  /// Rightmost maximal chain, bottom to top.
  std::vector<Elem> right_boundary() const;

  bool operator==(const PlanarDiagram& other) const {
    return lattice_ == other.lattice_ && up_order_ == other.up_order_ &&
           down_order_ == other.down_order_;
  }

 private:
  Lattice lattice_;
  std::vector<std::vector<Elem>> up_order_, down_order_;
};

/// The four boundary chains of a rectangular lattice, each bottom-to-top.
struct BoundaryChains {
  std::vector<Elem> c_ll, c_lr, c_ul, c_ur;
};

struct CornerLists {
  std::vector<Elem> left, right;
};

/// Doubly-irreducible elements other than bottom/top on the left and right
/// boundary chains, in chain order.
CornerLists corners(const PlanarDiagram& d);

/// The (left, right) corner pair when the diagram is rectangular: exactly
/// one corner on each side and the two are complementary.
std::optional<std::pair<Elem, Elem>> rectangular_corners(const PlanarDiagram& d);
bool is_rectangular(const PlanarDiagram& d);

/// Rectangular with both corners covered by the top.
bool is_patch(const PlanarDiagram& d);

/// Ideal/filter chains of the two corners. Throws NotRectangular otherwise.
BoundaryChains boundary_chains(const PlanarDiagram& d);

/// Chain with n elements (0 < 1 < ... < n-1).
PlanarDiagram chain_diagram(int n);

/// Direct product of two chains, m and n elements; the first factor runs
/// toward the lower left.
PlanarDiagram grid(int m, int n);

/// Componentwise order on the product; first factor toward the lower left.
/// Intended for chains (a planar diagram need not exist otherwise).
PlanarDiagram direct_product(const PlanarDiagram& a, const PlanarDiagram& b);

enum class GlueSide {
  LowerLeft,   // identify C_ur(b), a filter of b, with C_ll(a), an ideal of a
  LowerRight,  // identify C_ul(b), a filter of b, with C_lr(a), an ideal of a
};

struct GlueResult {
  PlanarDiagram glued;
  Embedding upper;  // embedding of a
  Embedding lower;  // embedding of b
  std::vector<Elem> shared_chain;  // glued ids, bottom to top
};

/// Gluing of two rectangular diagrams over a boundary ideal of a and a
/// boundary filter of b, identified bottom-to-bottom. The result is again
/// rectangular (verified) and both embeddings are cover-preserving.
GlueResult glue(const PlanarDiagram& a, const PlanarDiagram& b, GlueSide side);

/// The deduplicated chain {a ∨ y : y on the lower-right chain}, bottom to
/// top; a cover-chain from a to rcorner ∨ a. Coincides with the interval
/// [a, rcorner ∨ a] whenever that interval is a chain.
std::vector<Elem> corner_translate_chain(const PlanarDiagram& d, Elem a);

struct SplitResult {
  PlanarDiagram upper;                 // the filter of a
  PlanarDiagram lower;                 // the ideal of rcorner ∨ a
  std::vector<Elem> upper_to_orig;     // upper ids -> original ids
  std::vector<Elem> lower_to_orig;
  std::vector<Elem> shared_chain;      // original ids of [a, rcorner ∨ a]
};

/// Splits a rectangular diagram at an element a below the left corner into
/// the filter of a and the ideal of rcorner ∨ a, overlapping in the chain
/// [a, rcorner ∨ a]. Re-gluing the parts reproduces the diagram up to
/// isomorphism.
SplitResult split_at(const PlanarDiagram& d, Elem a);

struct RectangularCheckReport {
  bool corner_ideals_are_chains = false;     // ideal of each corner is its lower boundary chain
  bool corner_filters_are_chains = false;    // filter of each corner is its upper boundary chain
  bool corner_intervals_are_chains = false;  // [a, rcorner ∨ a] is a chain for every a <= lcorner
  bool split_reglue_isomorphic = false;
  bool steps_perspective_to_boundary = false;  // steps of [a, rcorner ∨ a] vs lower-right chain
  bool boundary_congruences_agree = false;     // con(upper-left) = con([a, rc∨a]) = con(lower-right)
  std::vector<std::string> failures;

  bool all() const {
    return corner_ideals_are_chains && corner_filters_are_chains &&
           corner_intervals_are_chains && split_reglue_isomorphic &&
           steps_perspective_to_boundary && boundary_congruences_agree;
  }
};

/// Verifies the structural facts every rectangular lattice satisfies;
/// reports pass/fail per item. Throws NotRectangular on non-rectangular
/// input.
RectangularCheckReport rectangular_check(const PlanarDiagram& d);

/// The induced diagram on a subset that forms a sublattice with inherited
/// covers (an ideal, a filter, or an intersection of the two).
/// Returns the diagram plus the map new id -> original id.
std::pair<PlanarDiagram, std::vector<Elem>> induced_subdiagram(const PlanarDiagram& d,
                                                               std::vector<Elem> elems);

}  // namespace rectlat
