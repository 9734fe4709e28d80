#pragma once

#include <string>
#include <utility>
#include <vector>

#include "rectlat/congruence.hpp"
#include "rectlat/fork_eye.hpp"
#include "rectlat/planar.hpp"

namespace rectlat {

/// Square grid with one eye in each covering square of the main diagonal.
/// The chain underlying it has d_len + 1 elements. The eyes identify the
/// step congruences of the two factors index-wise.
PlanarDiagram diagonal_eye_grid(int d_len);

struct Step2Result {
  PlanarDiagram k2;
  Embedding embedding;  // input into k2, cover- and congruence-preserving
  /// For every join-irreducible congruence of k2, a step index j on the
  /// lower-left chain C with con([C[j], C[j+1]]) equal to it. Steps inside
  /// the image of the input are preferred over mirrored ones.
  std::vector<std::pair<Congruence, int>> witnesses;
};

/// Glues a mirrored eyed grid below the lower-right chain so that every
/// join-irreducible congruence acquires a witness interval on the lower-left
/// chain of the result.
Step2Result step2(const PlanarDiagram& k1);

struct ColumnLatticeResult {
  PlanarDiagram diagram;
  IntervalRef witness;  // chain of length n whose steps generate the columns' congruences
};

/// The product of a chain of length c_len with a chain of length n
/// (n = positions.size()), with one eye per column: the eye of column i sits
/// in the square whose upper-right edge is the copy of step positions[i-1].
ColumnLatticeResult column_lattice(int c_len, const std::vector<int>& positions);

struct Step3Result {
  PlanarDiagram lattice;
  Embedding embedding;  // previous stage into this one
  IntervalRef witness;  // con(witness) is the extension of the processed congruence
};

/// Makes one congruence principal: decomposes it into join-irreducibles,
/// builds the column lattice over the lower-left chain and glues it below.
Step3Result step3_one(const PlanarDiagram& k2, const Congruence& theta);

struct PipelineStage {
  std::string name;
  PlanarDiagram diagram;
  Embedding from_previous;
};

struct PipelineTrace {
  std::vector<PipelineStage> stages;
  /// Congruence of the original input -> interval of the final lattice whose
  /// principal congruence is its extension.
  std::vector<std::pair<Congruence, IntervalRef>> witness_intervals;

  const PlanarDiagram& final_diagram() const { return stages.back().diagram; }
  Embedding total_embedding() const;
};

struct ExtendOptions {
  /// Skip congruences that are already principal at the current stage; the
  /// full expansion is available for fidelity runs.
  bool skip_already_principal = true;
};

/// The whole construction: one witness stage, then one principalization
/// stage per congruence of the input (in canonical order). The result is a
/// rectangular, cover-preserving, congruence-preserving extension in which
/// every congruence is principal.
PipelineTrace extend_all(const PlanarDiagram& l, const ExtendOptions& options = {});

struct ExtensionChecks {
  bool rectangular = false;
  bool cover_preserving = false;
  bool congruence_preserving = false;
  bool all_principal = false;
  bool witnesses_valid = false;

  bool all() const {
    return rectangular && cover_preserving && congruence_preserving && all_principal &&
           witnesses_valid;
  }
};

ExtensionChecks verify_extension(const PipelineTrace& trace);

struct RepresentOptions {
  int insertion_budget = 8;  // max forks + eyes tried on top of a grid
  int ji_budget = 5;         // max join-irreducible elements of the input
};

struct RepresentResult {
  PlanarDiagram k1;  // the found rectangular lattice with Con ≅ the input
  PipelineTrace trace;
  ConLattice final_congruences;
  std::vector<Elem> con_to_spec;  // member index -> element of the input lattice
};

/// Finds a rectangular lattice whose congruence lattice is isomorphic to the
/// given distributive lattice (bounded search over grids plus fork and eye
/// insertions), then extends it until every congruence is principal.
RepresentResult represent(const Lattice& d_spec, const RepresentOptions& options = {});

enum class Sidedness { LeftSided, RightSided, TwoSided };

/// Classifies a join-irreducible congruence by which lower boundary chains
/// carry a prime interval generating exactly it.
Sidedness classify_ji_congruence(const PlanarDiagram& d, const Congruence& gamma);

/// Whether a pair of chain congruences on the two lower boundary chains is
/// the boundary pair of some congruence of d.
bool is_compatible_pair(const PlanarDiagram& d, const PartialCongruence& bl,
                        const PartialCongruence& br);

}  // namespace rectlat
