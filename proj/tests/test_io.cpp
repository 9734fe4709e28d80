#include <cstdio>
#include <fstream>

#include "doctest.h"
#include "fixtures.hpp"
#include "rectlat/io.hpp"
#include "rectlat/pipeline.hpp"

using namespace rectlat;
using namespace rectlat::testing;

TEST_CASE("parse the one-element lattice") {
  ParsedLattice p = parse_lattice_text("lattice 1\n");
  CHECK(p.lattice.size() == 1);
  CHECK(p.diagram.has_value());
}

TEST_CASE("parse the square with and without orders") {
  std::string covers_only = "lattice 4\ncover 0 1\ncover 0 2\ncover 1 3\ncover 2 3\n";
  ParsedLattice p = parse_lattice_text(covers_only);
  CHECK(p.lattice.size() == 4);
  CHECK_FALSE(p.diagram.has_value());  // ambiguous orders are never guessed

  std::string with_orders = covers_only + "uporder 0: 1 2\ndownorder 3: 1 2\n";
  ParsedLattice q = parse_lattice_text(with_orders);
  REQUIRE(q.diagram.has_value());
  CHECK(*q.diagram == make_square());
}

TEST_CASE("parse errors carry positions") {
  CHECK_THROWS_AS(parse_lattice_text("lattice 2\ncover 0 0\n"), LatticeError);
  CHECK_THROWS_AS(parse_lattice_text("lattice 2\ncover 0 1"), LatticeError);  // no newline
  CHECK_THROWS_AS(parse_lattice_text("lattice 2\nedge 0 1\n"), LatticeError);
  CHECK_THROWS_AS(parse_lattice_text("lattice 2\ncover 0 7\n"), LatticeError);
  CHECK_THROWS_AS(parse_lattice_text("cover 0 1\n"), LatticeError);
  try {
    parse_lattice_text("lattice 2\ncover 0 x\n");
  } catch (const LatticeError& e) {
    CHECK(e.code() == ErrorCode::SyntaxError);
    CHECK(std::string(e.what()).find("line 2") != std::string::npos);
  }
  // incomplete diagram: one multi-cover element has an order line, another not
  std::string partial =
      "lattice 4\ncover 0 1\ncover 0 2\ncover 1 3\ncover 2 3\nuporder 0: 1 2\n";
  try {
    parse_lattice_text(partial);
    CHECK(false);
  } catch (const LatticeError& e) {
    CHECK(e.code() == ErrorCode::BadDiagram);
  }
}

TEST_CASE("comments are ignored") {
  ParsedLattice p = parse_lattice_text("# a square\nlattice 4\ncover 0 1\ncover 0 2\n"
                                       "# middle\ncover 1 3\ncover 2 3\n");
  CHECK(p.lattice.size() == 4);
}

TEST_CASE("emit/parse round trip is the identity on canonical files") {
  for (const PlanarDiagram& d : {make_square(), make_s7(), grid(3, 4), diagonal_eye_grid(2)}) {
    std::string text = emit_lat(d);
    ParsedLattice p = parse_lattice_text(text);
    REQUIRE(p.diagram.has_value());
    CHECK(*p.diagram == d);
    CHECK(emit_lat(*p.diagram) == text);
  }
  std::string no_diagram = emit_lat(make_square().lattice());
  CHECK(parse_lattice_text(no_diagram).lattice == make_square().lattice());
}

TEST_CASE("dot output shape and stability") {
  std::string dot = emit_dot(make_s7());
  CHECK(dot == emit_dot(make_s7()));
  size_t nodes = 0, pos = 0;
  while ((pos = dot.find("[label=", pos)) != std::string::npos) {
    ++nodes;
    ++pos;
  }
  CHECK(nodes == 7);

  std::string plain = emit_dot(make_m3());
  CHECK(plain.find("fillcolor") == std::string::npos);
  std::string full = emit_dot(make_m3(), Congruence::all(5));
  // a single block gets a single color
  CHECK(full.find("#a6cee3") != std::string::npos);
  CHECK(full.find("#b2df8a") == std::string::npos);
}

TEST_CASE("dot edge count on the fork core") {
  const PlanarDiagram s7 = make_s7();
  std::string dot = emit_dot(s7);
  size_t count = 0;
  for (auto [a, b] : s7.lattice().cover_pairs()) {
    std::string edge = "n" + std::to_string(a) + " -> n" + std::to_string(b) + ";";
    if (dot.find(edge) != std::string::npos) ++count;
  }
  CHECK(count == 9);
}

TEST_CASE("cli exit codes") {
  auto write = [](const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    out << text;
  };
  write("io_sq_bare.lat", emit_lat(make_square().lattice()));  // no diagram orders
  write("io_sq.lat", emit_lat(make_square()));
  write("io_chain.lat", emit_lat(PlanarDiagram::trivial(make_chain(4))));
  write("io_bad.lat", "lattice 2\ncover 0 0\n");

  CHECK(run({"check", "io_sq.lat"}) == 0);
  CHECK(run({"verify", "io_sq.lat"}) == 0);
  CHECK(run({"verify", "io_chain.lat"}) == 2);   // not rectangular: input error
  CHECK(run({"check", "io_bad.lat"}) == 2);      // parse error
  CHECK(run({"check", "io_missing.lat"}) == 2);  // no such file
  CHECK(run({"con", "io_sq.lat", "0", "1"}) == 0);
  CHECK(run({"fork", "io_sq_bare.lat", "0", "1", "2", "3"}) == 2);  // no diagram in file
  CHECK(run({"fork", "io_sq.lat", "0", "1", "2", "3", "--output", "io_fork.lat"}) == 0);
  CHECK(run({"verify", "io_fork.lat"}) == 0);

  for (const char* f : {"io_sq_bare.lat", "io_sq.lat", "io_chain.lat", "io_bad.lat",
                        "io_fork.lat"})
    std::remove(f);
}
