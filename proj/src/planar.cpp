#include "rectlat/planar.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "rectlat/congruence.hpp"

namespace rectlat {

namespace {

std::vector<Elem> walk(const std::vector<std::vector<Elem>>& order, Elem from, bool first) {
  std::vector<Elem> chain{from};
  Elem cur = from;
  while (!order[cur].empty()) {
    cur = first ? order[cur].front() : order[cur].back();
    chain.push_back(cur);
  }
  return chain;
}

}  // namespace

PlanarDiagram::PlanarDiagram(Lattice lattice, std::vector<std::vector<Elem>> up_order,
                             std::vector<std::vector<Elem>> down_order)
    : lattice_(std::move(lattice)), up_order_(std::move(up_order)),
      down_order_(std::move(down_order)) {
  const int n = lattice_.size();
  if (static_cast<int>(up_order_.size()) != n || static_cast<int>(down_order_.size()) != n)
    fail(ErrorCode::BadDiagram, "cover order tables have wrong size");
  for (Elem x = 0; x < n; ++x) {
    auto up = up_order_[x];
    std::sort(up.begin(), up.end());
    if (up != lattice_.upper_covers(x))
      fail(ErrorCode::BadDiagram,
           "upper cover order of " + std::to_string(x) + " is not a permutation of the covers");
    auto down = down_order_[x];
    std::sort(down.begin(), down.end());
    if (down != lattice_.lower_covers(x))
      fail(ErrorCode::BadDiagram,
           "lower cover order of " + std::to_string(x) + " is not a permutation of the covers");
  }
  for (bool left : {true, false}) {
    auto up_walk = walk(up_order_, lattice_.bottom(), left);
    auto down_walk = walk(down_order_, lattice_.top(), left);
    std::reverse(down_walk.begin(), down_walk.end());
    if (up_walk != down_walk)
      fail(ErrorCode::BadDiagram, std::string(left ? "left" : "right") +
                                      " boundary reads differently from below and from above");
  }
}

PlanarDiagram PlanarDiagram::trivial(Lattice lattice) {
  const int n = lattice.size();
  std::vector<std::vector<Elem>> up(n), down(n);
  for (Elem x = 0; x < n; ++x) {
    if (lattice.upper_covers(x).size() > 1 || lattice.lower_covers(x).size() > 1)
      fail(ErrorCode::BadDiagram,
           "cover orders of element " + std::to_string(x) + " are ambiguous");
    up[x] = lattice.upper_covers(x);
    down[x] = lattice.lower_covers(x);
  }
  return PlanarDiagram(std::move(lattice), std::move(up), std::move(down));
}

std::vector<Elem> PlanarDiagram::left_boundary() const {
  return walk(up_order_, lattice_.bottom(), true);
}

std::vector<Elem> PlanarDiagram::right_boundary() const {
  return walk(up_order_, lattice_.bottom(), false);
}

CornerLists corners(const PlanarDiagram& d) {
  const Lattice& l = d.lattice();
  CornerLists out;
  auto collect = [&](const std::vector<Elem>& boundary, std::vector<Elem>& into) {
    for (Elem x : boundary) {
      if (x == l.bottom() || x == l.top()) continue;
      if (l.upper_covers(x).size() == 1 && l.lower_covers(x).size() == 1) into.push_back(x);
    }
  };
  collect(d.left_boundary(), out.left);
  collect(d.right_boundary(), out.right);
  return out;
}

std::optional<std::pair<Elem, Elem>> rectangular_corners(const PlanarDiagram& d) {
  CornerLists cs = corners(d);
  if (cs.left.size() != 1 || cs.right.size() != 1) return std::nullopt;
  Elem lc = cs.left[0], rc = cs.right[0];
  const Lattice& l = d.lattice();
  if (l.join(lc, rc) != l.top() || l.meet(lc, rc) != l.bottom()) return std::nullopt;
  return std::make_pair(lc, rc);
}

bool is_rectangular(const PlanarDiagram& d) { return rectangular_corners(d).has_value(); }

bool is_patch(const PlanarDiagram& d) {
  auto cs = rectangular_corners(d);
  if (!cs) return false;
  return d.lattice().covers(cs->first, d.lattice().top()) &&
         d.lattice().covers(cs->second, d.lattice().top());
}

namespace {

std::vector<Elem> sorted_chain(const Lattice& l, std::vector<Elem> elems, const char* what) {
  std::sort(elems.begin(), elems.end(),
            [&](Elem a, Elem b) { return l.height(a) < l.height(b); });
  for (size_t i = 1; i < elems.size(); ++i)
    if (!l.covers(elems[i - 1], elems[i]))
      fail(ErrorCode::NotRectangular, std::string(what) + " is not a chain");
  return elems;
}

}  // namespace

BoundaryChains boundary_chains(const PlanarDiagram& d) {
  auto cs = rectangular_corners(d);
  if (!cs) fail(ErrorCode::NotRectangular, "diagram has no complementary corner pair");
  const Lattice& l = d.lattice();
  BoundaryChains bc;
  bc.c_ll = sorted_chain(l, l.ideal(cs->first), "ideal of the left corner");
  bc.c_ul = sorted_chain(l, l.filter(cs->first), "filter of the left corner");
  bc.c_lr = sorted_chain(l, l.ideal(cs->second), "ideal of the right corner");
  bc.c_ur = sorted_chain(l, l.filter(cs->second), "filter of the right corner");
  return bc;
}

PlanarDiagram chain_diagram(int n) {
  if (n < 1) throw std::invalid_argument("chain needs at least one element");
  std::vector<CoverPair> covers;
  for (Elem x = 0; x + 1 < n; ++x) covers.emplace_back(x, x + 1);
  return PlanarDiagram::trivial(Lattice::from_covers(n, std::move(covers)));
}

PlanarDiagram direct_product(const PlanarDiagram& a, const PlanarDiagram& b) {
  const Lattice& la = a.lattice();
  const Lattice& lb = b.lattice();
  const int na = la.size(), nb = lb.size();
  auto id = [nb](Elem x, Elem y) { return x * nb + y; };
  std::vector<CoverPair> covers;
  std::vector<std::vector<Elem>> up(na * nb), down(na * nb);
  for (Elem x = 0; x < na; ++x)
    for (Elem y = 0; y < nb; ++y) {
      // first factor toward the lower left: its successors are leftmost above,
      // its predecessors rightmost below
      for (Elem x2 : a.up_order(x)) {
        covers.emplace_back(id(x, y), id(x2, y));
        up[id(x, y)].push_back(id(x2, y));
      }
      for (Elem y2 : b.up_order(y)) {
        covers.emplace_back(id(x, y), id(x, y2));
        up[id(x, y)].push_back(id(x, y2));
      }
      for (Elem y2 : b.down_order(y)) down[id(x, y)].push_back(id(x, y2));
      for (Elem x2 : a.down_order(x)) down[id(x, y)].push_back(id(x2, y));
    }
  return PlanarDiagram(Lattice::from_covers(na * nb, std::move(covers)), std::move(up),
                       std::move(down));
}

PlanarDiagram grid(int m, int n) {
  if (m < 2 || n < 2) throw std::invalid_argument("grid needs chains with at least 2 elements");
  return direct_product(chain_diagram(m), chain_diagram(n));
}

GlueResult glue(const PlanarDiagram& a, const PlanarDiagram& b, GlueSide side) {
  if (!is_rectangular(a) || !is_rectangular(b))
    fail(ErrorCode::NotRectangular, "gluing requires rectangular inputs");
  BoundaryChains bca = boundary_chains(a);
  BoundaryChains bcb = boundary_chains(b);
  const std::vector<Elem>& ideal_of_a = side == GlueSide::LowerLeft ? bca.c_ll : bca.c_lr;
  const std::vector<Elem>& filter_of_b = side == GlueSide::LowerLeft ? bcb.c_ur : bcb.c_ul;
  if (ideal_of_a.size() != filter_of_b.size())
    fail(ErrorCode::ChainLengthMismatch,
         "identified chains have " + std::to_string(ideal_of_a.size()) + " and " +
             std::to_string(filter_of_b.size()) + " elements");

  const Lattice& la = a.lattice();
  const Lattice& lb = b.lattice();
  const int na = la.size(), nb = lb.size();
  const int shared = static_cast<int>(ideal_of_a.size());

  // b keeps its ids; elements of a outside the identified ideal follow
  std::vector<Elem> map_a(na, -1), map_b(nb);
  std::iota(map_b.begin(), map_b.end(), 0);
  for (int k = 0; k < shared; ++k) map_a[ideal_of_a[k]] = filter_of_b[k];
  int next = nb;
  for (Elem x = 0; x < na; ++x)
    if (map_a[x] < 0) map_a[x] = next++;
  const int n = next;

  std::vector<char> is_shared_b(nb, 0);
  for (Elem x : filter_of_b) is_shared_b[x] = 1;

  std::vector<CoverPair> covers;
  for (auto [x, y] : lb.cover_pairs()) covers.emplace_back(x, y);
  for (auto [x, y] : la.cover_pairs()) {
    CoverPair p{map_a[x], map_a[y]};
    if (p.first < nb && p.second < nb) continue;  // chain cover, already present from b
    covers.push_back(p);
  }

  std::vector<std::vector<Elem>> up(n), down(n);
  for (Elem x = 0; x < nb; ++x) {
    for (Elem y : b.down_order(x)) down[x].push_back(y);
    if (!is_shared_b[x])
      for (Elem y : b.up_order(x)) up[x].push_back(y);
  }
  // on the shared chain the upper covers come from a, the lower covers from b
  for (Elem x = 0; x < na; ++x) {
    Elem gx = map_a[x];
    for (Elem y : a.up_order(x)) up[gx].push_back(map_a[y]);
    if (gx >= nb)
      for (Elem y : a.down_order(x)) down[gx].push_back(map_a[y]);
  }

  Lattice glued_lattice = Lattice::from_covers(n, std::move(covers));
  PlanarDiagram glued(std::move(glued_lattice), std::move(up), std::move(down));
  if (!is_rectangular(glued))
    fail(ErrorCode::NotRectangular, "gluing did not produce a rectangular lattice");

  std::vector<Elem> shared_ids;
  for (Elem x : filter_of_b) shared_ids.push_back(x);
  Embedding upper(la, glued.lattice(), std::move(map_a));
  Embedding lower(lb, glued.lattice(), std::move(map_b));
  return GlueResult{std::move(glued), std::move(upper), std::move(lower),
                    std::move(shared_ids)};
}

std::pair<PlanarDiagram, std::vector<Elem>> induced_subdiagram(const PlanarDiagram& d,
                                                               std::vector<Elem> elems) {
  std::sort(elems.begin(), elems.end());
  const Lattice& l = d.lattice();
  std::vector<Elem> to_new(l.size(), -1);
  for (size_t i = 0; i < elems.size(); ++i) to_new[elems[i]] = static_cast<Elem>(i);
  std::vector<CoverPair> covers;
  std::vector<std::vector<Elem>> up(elems.size()), down(elems.size());
  for (Elem x : elems) {
    for (Elem y : d.up_order(x))
      if (to_new[y] >= 0) {
        covers.emplace_back(to_new[x], to_new[y]);
        up[to_new[x]].push_back(to_new[y]);
      }
    for (Elem y : d.down_order(x))
      if (to_new[y] >= 0) down[to_new[x]].push_back(to_new[y]);
  }
  Lattice sub = Lattice::from_covers(static_cast<int>(elems.size()), std::move(covers));
  return {PlanarDiagram(std::move(sub), std::move(up), std::move(down)), std::move(elems)};
}

// The joins of a with the lower-right chain form a cover-chain from a up to
// rcorner ∨ a (deduplicated); it equals the interval [a, rcorner ∨ a]
// whenever that interval is a chain.
std::vector<Elem> corner_translate_chain(const PlanarDiagram& d, Elem a) {
  BoundaryChains bc = boundary_chains(d);
  const Lattice& l = d.lattice();
  std::vector<Elem> chain;
  for (Elem y : bc.c_lr) {
    Elem j = l.join(a, y);
    if (chain.empty() || chain.back() != j) chain.push_back(j);
  }
  return chain;
}

SplitResult split_at(const PlanarDiagram& d, Elem a) {
  auto cs = rectangular_corners(d);
  if (!cs) fail(ErrorCode::NotRectangular, "split requires a rectangular diagram");
  const Lattice& l = d.lattice();
  if (a < 0 || a >= l.size() || !l.leq(a, cs->first))
    fail(ErrorCode::NotBelowCorner, "split element must lie below the left corner");
  Elem hi = l.join(cs->second, a);
  std::vector<Elem> chain = corner_translate_chain(d, a);
  auto [upper, upper_ids] = induced_subdiagram(d, l.filter(a));
  auto [lower, lower_ids] = induced_subdiagram(d, l.ideal(hi));
  return SplitResult{std::move(upper), std::move(lower), std::move(upper_ids),
                     std::move(lower_ids), std::move(chain)};
}

namespace {

// Re-glue the two halves of a split. When one half is the whole lattice the
// gluing degenerates to the identity on it.
PlanarDiagram reglue(const SplitResult& s, const PlanarDiagram& whole) {
  if (s.lower.size() == whole.size()) return s.lower;
  if (s.upper.size() == whole.size()) return s.upper;
  return glue(s.upper, s.lower, GlueSide::LowerRight).glued;
}

}  // namespace

RectangularCheckReport rectangular_check(const PlanarDiagram& d) {
  auto cs = rectangular_corners(d);
  if (!cs) fail(ErrorCode::NotRectangular, "diagram is not rectangular");
  const Lattice& l = d.lattice();
  RectangularCheckReport r;
  auto note = [&](const std::string& msg) { r.failures.push_back(msg); };

  BoundaryChains bc = boundary_chains(d);  // validates the four chains
  std::vector<Elem> lb = d.left_boundary(), rb = d.right_boundary();
  auto prefix_of = [](const std::vector<Elem>& chain, const std::vector<Elem>& boundary) {
    if (chain.size() > boundary.size()) return false;
    return std::equal(chain.begin(), chain.end(), boundary.begin());
  };
  auto suffix_of = [](const std::vector<Elem>& chain, const std::vector<Elem>& boundary) {
    if (chain.size() > boundary.size()) return false;
    return std::equal(chain.rbegin(), chain.rend(), boundary.rbegin());
  };
  r.corner_ideals_are_chains = prefix_of(bc.c_ll, lb) && prefix_of(bc.c_lr, rb);
  if (!r.corner_ideals_are_chains) note("a corner ideal is not the lower boundary chain");
  r.corner_filters_are_chains = suffix_of(bc.c_ul, lb) && suffix_of(bc.c_ur, rb);
  if (!r.corner_filters_are_chains) note("a corner filter is not the upper boundary chain");

  // the corner-translate chain must be a cover-chain from a up to rcorner ∨ a
  r.corner_intervals_are_chains = true;
  auto check_translate = [&](const std::vector<Elem>& from_chain, Elem far_corner,
                             bool left_side) {
    for (Elem a : from_chain) {
      std::vector<Elem> chain;
      const std::vector<Elem>& other = left_side ? bc.c_lr : bc.c_ll;
      for (Elem y : other) {
        Elem j = l.join(a, y);
        if (chain.empty() || chain.back() != j) chain.push_back(j);
      }
      bool ok = chain.front() == a && chain.back() == l.join(far_corner, a);
      for (size_t i = 0; i + 1 < chain.size(); ++i)
        if (!l.covers(chain[i], chain[i + 1])) ok = false;
      if (!ok) {
        r.corner_intervals_are_chains = false;
        note("the translate chain of " + std::to_string(a) + " is not a cover-chain");
      }
    }
  };
  check_translate(bc.c_ll, cs->second, true);
  check_translate(bc.c_lr, cs->first, false);

  r.split_reglue_isomorphic = true;
  for (Elem a : bc.c_ll) {
    SplitResult s = split_at(d, a);
    bool covered = true;  // the filter and the ideal exhaust the lattice
    {
      std::vector<char> seen(l.size(), 0);
      for (Elem x : s.upper_to_orig) seen[x] = 1;
      for (Elem x : s.lower_to_orig) seen[x] = 1;
      for (Elem x = 0; x < l.size(); ++x) covered = covered && seen[x];
    }
    if (!covered || !is_isomorphic(reglue(s, d).lattice(), l)) {
      r.split_reglue_isomorphic = false;
      note("re-gluing the split at " + std::to_string(a) + " is not isomorphic to the input");
    }
  }

  r.steps_perspective_to_boundary = true;
  for (Elem a : bc.c_ll) {
    std::vector<Elem> chain = corner_translate_chain(d, a);
    for (size_t i = 0; i + 1 < chain.size(); ++i) {
      IntervalRef p{chain[i], chain[i + 1]};
      bool found = false;
      for (size_t j = 0; j + 1 < bc.c_lr.size() && !found; ++j) {
        IntervalRef q{bc.c_lr[j], bc.c_lr[j + 1]};
        found = perspectivity(l, p, q) != Persp::None;
      }
      if (!found) {
        r.steps_perspective_to_boundary = false;
        note("step [" + std::to_string(p.lo) + ", " + std::to_string(p.hi) +
             "] has no perspective step on the lower-right chain");
      }
    }
  }

  Congruence upper_left = principal_congruence(l, cs->first, l.top());
  Congruence lower_right = principal_congruence(l, l.bottom(), cs->second);
  r.boundary_congruences_agree = upper_left == lower_right;
  for (Elem a : bc.c_ll)
    if (!(principal_congruence(l, a, l.join(cs->second, a)) == upper_left))
      r.boundary_congruences_agree = false;
  if (!r.boundary_congruences_agree)
    note("the upper-left, corner-interval and lower-right chain congruences differ");

  return r;
}

}  // namespace rectlat
