#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "rectlat/lattice.hpp"
#include "rectlat/planar.hpp"

namespace rectlat {

/// A congruence as a partition of 0..n-1 in canonical form: block_of[x] is
/// the least element of x's block.
struct Congruence {
  int n = 0;
  std::vector<Elem> block_of;

  Congruence() = default;
  /// Canonicalizes an arbitrary labelling.
  Congruence(int size, std::vector<Elem> labels);

  static Congruence identity(int n);
  static Congruence all(int n);

  bool collapses(Elem a, Elem b) const { return block_of[a] == block_of[b]; }
  bool refines(const Congruence& coarser) const;
  int num_blocks() const;
  std::vector<std::vector<Elem>> blocks() const;

  bool operator==(const Congruence&) const = default;
  bool operator<(const Congruence& other) const;  // (num blocks, labels) ascending
};

std::string to_string(const Congruence& c);

/// Partition of a subset of elements, canonical leader = least element.
struct PartialCongruence {
  std::vector<Elem> domain;    // as given (chain order when used on a boundary)
  std::vector<Elem> block_of;  // parallel to domain

  static PartialCongruence identity_on(std::vector<Elem> domain);
  bool same_block(Elem x, Elem y) const;
  bool operator==(const PartialCongruence&) const = default;
};

std::string to_string(const PartialCongruence& c);

/// True when the partition respects joins and meets (full-loop check).
bool satisfies_substitution(const Lattice& l, const Congruence& c);

/// The least congruence collapsing every given pair: union the pairs, then
/// close under x≡y implying x∨z≡y∨z and x∧z≡y∧z.
Congruence generated_congruence(const Lattice& l, const std::vector<std::pair<Elem, Elem>>& pairs);

Congruence principal_congruence(const Lattice& l, Elem a, Elem b);

Congruence congruence_join(const Lattice& l, const Congruence& a, const Congruence& b);
Congruence congruence_meet(const Congruence& a, const Congruence& b);

/// The congruence lattice: every congruence of l, in canonical order, with
/// the refinement order, join/meet tables and join-irreducibility flags.
/// Generated as the join closure of the principal congruences of the prime
/// intervals plus the identity.
class ConLattice {
 public:
  static ConLattice of(const Lattice& l);

  const Lattice& base() const { return lattice_; }
  const std::vector<Congruence>& members() const { return members_; }
  int size() const { return static_cast<int>(members_.size()); }
  int index_of(const Congruence& c) const;  // -1 if absent

  bool leq(int i, int j) const { return members_[i].refines(members_[j]); }
  int join(int i, int j) const { return join_[i * size() + j]; }
  int meet(int i, int j) const { return meet_[i * size() + j]; }
  bool join_irreducible(int i) const { return ji_[i]; }
  int identity_index() const { return identity_; }
  int all_index() const { return all_; }

  /// Index of con(a, b), via joins of prime-interval congruences along a
  /// maximal chain of [a∧b, a∨b].
  int principal_index(Elem a, Elem b) const;

  /// The refinement order as a lattice (members in canonical order).
  Lattice order_lattice() const;

 private:
  explicit ConLattice(Lattice l) : lattice_(std::move(l)) {}

  Lattice lattice_;
  std::vector<Congruence> members_;
  std::vector<int> cover_con_;  // aligned with lattice_.cover_pairs()
  std::vector<int> join_, meet_;
  std::vector<char> ji_;
  int identity_ = 0, all_ = 0;
};

inline ConLattice con_lattice(const Lattice& l) { return ConLattice::of(l); }

struct AllPrincipalResult {
  bool all_principal = false;
  std::optional<Congruence> non_principal;  // first counterexample, canonical order

  explicit operator bool() const { return all_principal; }
};

AllPrincipalResult is_all_principal(const Lattice& l);

/// First pair (a, b), a <= b in lexicographic order, with con(a, b) = c.
std::optional<std::pair<Elem, Elem>> principal_witness(const ConLattice& cl, const Congruence& c);

PartialCongruence restrict_to(const Congruence& c, const std::vector<Elem>& domain);

/// Restrictions of a congruence to the two lower boundary chains.
std::pair<PartialCongruence, PartialCongruence> boundary_pair(const PlanarDiagram& d,
                                                              const Congruence& c);

/// The congruence generated by all pairs inside blocks of the two boundary
/// partitions. For every congruence c of a rectangular lattice,
/// reconstruct_from_pair(boundary_pair(c)) = c.
Congruence reconstruct_from_pair(const PlanarDiagram& d, const PartialCongruence& pl,
                                 const PartialCongruence& pr);

/// Pullback of a congruence of the target along an embedding.
Congruence pullback(const Embedding& e, const Congruence& target_congruence);

/// The congruence of the target generated by the images of the collapsed
/// pairs; equals the unique extension when e is congruence-preserving.
Congruence extend_through(const Embedding& e, const Congruence& source_congruence);

/// The restriction map Con(target) -> Con(source) is a bijection.
bool is_congruence_preserving_extension(const Embedding& e);

/// Covers of the source map to covers of the target.
bool is_cover_preserving_extension(const Embedding& e);

/// The maximal join-irreducible members below c, canonical order; their join
/// is c. Empty for the identity congruence.
std::vector<Congruence> join_decomposition(const ConLattice& cl, const Congruence& c);

}  // namespace rectlat
