#include "doctest.h"
#include "fixtures.hpp"
#include "rectlat/lattice.hpp"

using namespace rectlat;
using namespace rectlat::testing;

TEST_CASE("from_covers builds the one-element lattice") {
  Lattice l = Lattice::from_covers(1, {});
  CHECK(l.size() == 1);
  CHECK(l.bottom() == l.top());
}

TEST_CASE("from_covers builds the square") {
  Lattice l = Lattice::from_covers(4, {{0, 1}, {0, 2}, {1, 3}, {2, 3}});
  CHECK(l.bottom() == 0);
  CHECK(l.top() == 3);
  CHECK(l.join(1, 2) == 3);
  CHECK(l.meet(1, 2) == 0);
  CHECK(l.covers(0, 1));
  CHECK_FALSE(l.covers(0, 3));
}

TEST_CASE("from_covers accepts the diamond") {
  Lattice l = Lattice::from_covers(5, {{0, 1}, {0, 2}, {0, 3}, {1, 4}, {2, 4}, {3, 4}});
  CHECK(l.join(1, 2) == 4);
  CHECK(l.meet(2, 3) == 0);
}

TEST_CASE("from_covers rejects transitively implied pairs") {
  CHECK_THROWS_AS(Lattice::from_covers(4, {{0, 1}, {0, 2}, {1, 3}, {2, 3}, {0, 3}}),
                  LatticeError);
  try {
    Lattice::from_covers(4, {{0, 1}, {0, 2}, {1, 3}, {2, 3}, {0, 3}});
  } catch (const LatticeError& e) {
    CHECK(e.code() == ErrorCode::NotHasse);
  }
}

TEST_CASE("from_covers rejects posets that are not lattices") {
  // two maximal elements
  try {
    Lattice::from_covers(4, {{0, 1}, {0, 2}, {1, 3}});
    CHECK(false);
  } catch (const LatticeError& e) {
    CHECK(e.code() == ErrorCode::Disconnected);
  }
  // hexagon without unique joins: 0 < {1,2}, both below {3,4}, both below 5
  try {
    Lattice::from_covers(6, {{0, 1}, {0, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 5}, {4, 5}});
    CHECK(false);
  } catch (const LatticeError& e) {
    CHECK(e.code() == ErrorCode::NotALattice);
  }
  // cycle
  CHECK_THROWS_AS(Lattice::from_covers(3, {{0, 1}, {1, 2}, {2, 0}}), LatticeError);
  // reflexive pair
  CHECK_THROWS_AS(Lattice::from_covers(2, {{0, 0}, {0, 1}}), LatticeError);
}

TEST_CASE("hasse minimality: removing any cover changes the order") {
  const Lattice s7 = make_s7().lattice();
  auto pairs = s7.cover_pairs();
  for (size_t k = 0; k < pairs.size(); ++k) {
    std::vector<CoverPair> fewer;
    for (size_t j = 0; j < pairs.size(); ++j)
      if (j != k) fewer.push_back(pairs[j]);
    bool different = false;
    try {
      Lattice smaller = Lattice::from_covers(s7.size(), fewer);
      different = !smaller.leq(pairs[k].first, pairs[k].second);
    } catch (const LatticeError&) {
      different = true;  // no longer a lattice at all
    }
    CHECK(different);
  }
}

TEST_CASE("semimodularity") {
  CHECK(is_semimodular(make_square().lattice()));
  CHECK(is_semimodular(make_s7().lattice()));
  CHECK(is_semimodular(make_m3().lattice()));
  CHECK_FALSE(is_semimodular(make_n5()));
}

TEST_CASE("distributivity") {
  CHECK(is_distributive(make_chain(5)));
  CHECK_FALSE(is_distributive(make_m3().lattice()));
  CHECK(is_distributive(grid(3, 3).lattice()));
  CHECK_FALSE(is_distributive(make_s7().lattice()));
}

TEST_CASE("perspectivity on the square, the fork core and a chain") {
  const Lattice sq = make_square().lattice();
  CHECK(perspectivity(sq, {0, 1}, {2, 3}) == Persp::Up);
  CHECK(perspectivity(sq, {2, 3}, {0, 1}) == Persp::Down);

  const Lattice s7 = make_s7().lattice();
  // [o, a] is up-perspective to [b, c]
  CHECK(perspectivity(s7, {0, 1}, {2, 3}) == Persp::Up);
  CHECK(perspectivity(s7, {2, 3}, {0, 1}) == Persp::Down);

  const Lattice c3 = make_chain(3);
  CHECK(perspectivity(c3, {0, 1}, {1, 2}) == Persp::None);
  CHECK_THROWS_AS(perspectivity(c3, {0, 2}, {0, 1}), LatticeError);
}

TEST_CASE("perspectivity is symmetric up/down") {
  const Lattice s7 = make_s7().lattice();
  for (auto p : s7.cover_pairs())
    for (auto q : s7.cover_pairs()) {
      if (p == q) continue;  // an interval is perspective to itself both ways
      Persp up = perspectivity(s7, {p.first, p.second}, {q.first, q.second});
      Persp down = perspectivity(s7, {q.first, q.second}, {p.first, p.second});
      if (up == Persp::Up) CHECK(down == Persp::Down);
      if (up == Persp::Down) CHECK(down == Persp::Up);
    }
}

TEST_CASE("interval_chain") {
  const Lattice s7 = make_s7().lattice();
  auto single = interval_chain(s7, 3, 3);
  REQUIRE(single.has_value());
  CHECK(*single == std::vector<Elem>{3});
  // [o, l] = o < a < l
  auto left = interval_chain(s7, 0, 4);
  REQUIRE(left.has_value());
  CHECK(*left == std::vector<Elem>{0, 1, 4});

  const Lattice sq = make_square().lattice();
  CHECK_FALSE(interval_chain(sq, 0, 3).has_value());
  CHECK_THROWS_AS(interval_chain(sq, 1, 2), std::invalid_argument);
}

TEST_CASE("embeddings validate and compose") {
  const Lattice sq = make_square().lattice();
  Embedding id = Embedding::identity(sq);
  CHECK(id.map == std::vector<Elem>{0, 1, 2, 3});
  Embedding twice = compose(id, id);
  CHECK(twice.map == id.map);
  // bottom/top of a chain into the square is not meet-preserving on covers,
  // but it is join/meet preserving as a map of the 2-chain, so it validates
  Embedding ends(make_chain(2), sq, {0, 3});
  CHECK(ends(1) == 3);
  // a non-embedding: collapses the square onto a chain
  CHECK_THROWS_AS(Embedding(sq, make_chain(4), std::vector<Elem>{0, 1, 2, 3}),
                  std::invalid_argument);
}

TEST_CASE("isomorphism checker") {
  CHECK(is_isomorphic(make_square().lattice(), grid(2, 2).lattice()));
  CHECK_FALSE(is_isomorphic(make_square().lattice(), make_chain(4)));
  // relabelled fork core
  Lattice s7b = Lattice::from_covers(
      7, {{6, 5}, {6, 4}, {5, 3}, {4, 3}, {5, 2}, {4, 1}, {3, 0}, {2, 0}, {1, 0}});
  auto iso = lattice_isomorphism(make_s7().lattice(), s7b);
  REQUIRE(iso.has_value());
  CHECK((*iso)[0] == 6);
  CHECK((*iso)[6] == 0);
}
