#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "rectlat/error.hpp"

namespace rectlat {

using Elem = int;
using CoverPair = std::pair<Elem, Elem>;

/// Finite lattice on dense element ids 0..n-1.
///
/// Stores the Hasse relation (cover pairs) together with precomputed order,
/// join and meet tables, the bottom and the top. Immutable after
/// construction; every operation that "modifies" a lattice builds a new one.
class Lattice {
 public:
  /// Validates a cover list and builds the lattice.
  ///
  /// Rejects cover lists that are not Hasse-minimal (NotHasse), posets
  /// without a unique bottom or top (Disconnected), and posets in which some
  /// pair has no unique join or meet (NotALattice).
  static Lattice from_covers(int n, std::vector<CoverPair> cover_pairs);

  int size() const { return n_; }
  Elem bottom() const { return bottom_; }
  Elem top() const { return top_; }

  bool leq(Elem a, Elem b) const { return (upset_[a][b >> 6] >> (b & 63)) & 1u; }
  bool lt(Elem a, Elem b) const { return a != b && leq(a, b); }
  Elem join(Elem a, Elem b) const { return join_[a * n_ + b]; }
  Elem meet(Elem a, Elem b) const { return meet_[a * n_ + b]; }

  /// a is covered by b.
  bool covers(Elem a, Elem b) const;

  const std::vector<Elem>& upper_covers(Elem a) const { return up_[a]; }
  const std::vector<Elem>& lower_covers(Elem a) const { return down_[a]; }
  const std::vector<CoverPair>& cover_pairs() const { return covers_; }

  /// Length of the longest chain from the bottom to a.
  int height(Elem a) const { return height_[a]; }

  /// Elements <= a (ascending ids).
  std::vector<Elem> ideal(Elem a) const;
  /// Elements >= a (ascending ids).
  std::vector<Elem> filter(Elem a) const;

  bool operator==(const Lattice& other) const {
    return n_ == other.n_ && covers_ == other.covers_;
  }

 private:
  Lattice() = default;

  int n_ = 0;
  Elem bottom_ = 0, top_ = 0;
  std::vector<CoverPair> covers_;               // sorted lexicographically
  std::vector<std::vector<Elem>> up_, down_;    // adjacency, ascending ids
  std::vector<std::vector<std::uint64_t>> upset_;
  std::vector<Elem> join_, meet_;
  std::vector<int> height_;
};

/// Closed interval [lo, hi]; prime when lo is covered by hi.
struct IntervalRef {
  Elem lo = 0;
  Elem hi = 0;
  bool operator==(const IntervalRef&) const = default;
};

enum class Persp { Up, Down, None };

/// Perspectivity of prime intervals: [a,b] is up-perspective to [c,d] when
/// b∧c = a and b∨c = d; down-perspective is the dual. Up wins when both
/// apply (p == q). Throws NotPrime unless both intervals are prime.
Persp perspectivity(const Lattice& l, IntervalRef p, IntervalRef q);

/// The elements of [lo, hi] bottom-to-top if they form a chain, otherwise
/// nothing.
std::optional<std::vector<Elem>> interval_chain(const Lattice& l, Elem lo, Elem hi);

/// a∧b covered by a implies b covered by a∨b, for all pairs.
bool is_semimodular(const Lattice& l);

/// x∧(y∨z) = (x∧y)∨(x∧z) for all triples.
bool is_distributive(const Lattice& l);

/// Join-irreducible elements: exactly one lower cover.
std::vector<Elem> join_irreducible_elements(const Lattice& l);

/// An injective join- and meet-preserving map between lattices.
/// Validated on construction.
struct Embedding {
  Lattice source;
  Lattice target;
  std::vector<Elem> map;

  Embedding(Lattice src, Lattice tgt, std::vector<Elem> m);
  static Embedding identity(const Lattice& l);
  Elem operator()(Elem x) const { return map[x]; }
};

/// first: L -> M, second: M -> K, result: L -> K.
Embedding compose(const Embedding& first, const Embedding& second);

/// A lattice isomorphism a -> b as an element map, if one exists.
std::optional<std::vector<Elem>> lattice_isomorphism(const Lattice& a, const Lattice& b);
bool is_isomorphic(const Lattice& a, const Lattice& b);

}  // namespace rectlat
