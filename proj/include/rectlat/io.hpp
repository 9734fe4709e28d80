#pragma once

#include <optional>
#include <string>
#include <vector>

#include "rectlat/congruence.hpp"
#include "rectlat/planar.hpp"

namespace rectlat {

/// A parsed lattice file; the diagram is present when the file carries
/// enough `uporder`/`downorder` lines (or none are needed).
struct ParsedLattice {
  Lattice lattice;
  std::optional<PlanarDiagram> diagram;
};

/// Text format: a `lattice <n>` header, `cover <a> <b>` lines, optional
/// `uporder <x>: <c...>` / `downorder <x>: <c...>` lines, `#` comments,
/// 0-based decimal ids, final newline required.
ParsedLattice parse_lattice_text(const std::string& text);
ParsedLattice parse_lattice_file(const std::string& path);

std::string emit_lat(const Lattice& l);
std::string emit_lat(const PlanarDiagram& d);

/// Hasse diagram as a DOT digraph: edges point upward, ranks follow height,
/// nodes within a rank keep the diagram's left-to-right order. Blocks of the
/// highlighted congruence are colored; highlighted elements are drawn bold.
/// Byte-stable for a given input.
std::string emit_dot(const PlanarDiagram& d,
                     const std::optional<Congruence>& highlight_congruence = std::nullopt,
                     const std::vector<Elem>& highlight_elements = {});

/// Command line entry point; returns the process exit code
/// (0 ok, 1 property-check failure, 2 input error).
int run(const std::vector<std::string>& args);
int run(int argc, const char* const* argv);

}  // namespace rectlat
