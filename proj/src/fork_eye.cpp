#include "rectlat/fork_eye.hpp"

#include <algorithm>
#include <numeric>

namespace rectlat {

namespace {

int index_of(const std::vector<Elem>& v, Elem x) {
  auto it = std::find(v.begin(), v.end(), x);
  return it == v.end() ? -1 : static_cast<int>(it - v.begin());
}

void replace_in(std::vector<Elem>& v, Elem from, Elem to) {
  int i = index_of(v, from);
  if (i < 0) throw std::logic_error("cover order entry missing");
  v[i] = to;
}

// Mutable cover-order lists; the cover relation is implied by the up lists.
struct DiagramBuilder {
  std::vector<std::vector<Elem>> up, down;

  explicit DiagramBuilder(const PlanarDiagram& d) : up(d.up_orders()), down(d.down_orders()) {}

  Elem add_element() {
    up.emplace_back();
    down.emplace_back();
    return static_cast<Elem>(up.size() - 1);
  }

  PlanarDiagram finish() const {
    std::vector<CoverPair> covers;
    for (Elem x = 0; x < static_cast<Elem>(up.size()); ++x)
      for (Elem y : up[x]) covers.emplace_back(x, y);
    Lattice l = Lattice::from_covers(static_cast<int>(up.size()), std::move(covers));
    return PlanarDiagram(std::move(l), up, down);
  }
};

}  // namespace

std::vector<CoveringSquare> covering_squares(const PlanarDiagram& d) {
  const Lattice& l = d.lattice();
  std::vector<CoveringSquare> out;
  for (Elem o = 0; o < l.size(); ++o) {
    const auto& ups = d.up_order(o);
    for (size_t i = 0; i + 1 < ups.size(); ++i) {
      Elem left = ups[i], right = ups[i + 1];
      Elem t = l.join(left, right);
      if (l.covers(left, t) && l.covers(right, t))
        out.push_back(CoveringSquare{o, left, right, t});
    }
  }
  return out;
}

CoveringSquare square_at(const PlanarDiagram& d, Elem o, Elem l, Elem r, Elem t) {
  const Lattice& lat = d.lattice();
  auto bad = [&](const std::string& why) {
    fail(ErrorCode::NotACoveringSquare, "(" + std::to_string(o) + ", " + std::to_string(l) +
                                            ", " + std::to_string(r) + ", " + std::to_string(t) +
                                            "): " + why);
  };
  for (Elem e : {o, l, r, t})
    if (e < 0 || e >= lat.size()) bad("element out of range");
  if (l == r) bad("sides coincide");
  if (!lat.covers(o, l) || !lat.covers(o, r) || !lat.covers(l, t) || !lat.covers(r, t))
    bad("not four cover relations");
  int pl = index_of(d.up_order(o), l), pr = index_of(d.up_order(o), r);
  if (pl + 1 != pr) bad("sides are not left-right adjacent above the base");
  return CoveringSquare{o, l, r, t};
}

std::vector<Elem> eyes(const PlanarDiagram& d) {
  const Lattice& l = d.lattice();
  std::vector<Elem> out;
  for (Elem x = 0; x < l.size(); ++x) {
    if (l.upper_covers(x).size() != 1 || l.lower_covers(x).size() != 1) continue;
    Elem u = l.lower_covers(x)[0], w = l.upper_covers(x)[0];
    int interior = 0;  // includes x itself
    bool length_two = true;
    for (Elem y = 0; y < l.size(); ++y) {
      if (y == u || y == w || !l.leq(u, y) || !l.leq(y, w)) continue;
      ++interior;
      if (!l.covers(u, y) || !l.covers(y, w)) length_two = false;
    }
    // x must be the interior of a cover-preserving diamond: two more interior
    // elements beside it, so removing x leaves a covering square or wider
    if (length_two && interior >= 3) out.push_back(x);
  }
  return out;
}

bool is_slim(const PlanarDiagram& d) { return eyes(d).empty(); }

EyeInsertion insert_eye(const PlanarDiagram& d, const CoveringSquare& s) {
  square_at(d, s.o, s.l, s.r, s.t);
  DiagramBuilder b(d);
  int pos_top = index_of(b.down[s.t], s.l);
  if (pos_top < 0 || pos_top + 1 >= static_cast<int>(b.down[s.t].size()) ||
      b.down[s.t][pos_top + 1] != s.r)
    fail(ErrorCode::NotACoveringSquare, "square sides are not adjacent below the top");
  Elem x = b.add_element();
  b.up[s.o].insert(b.up[s.o].begin() + index_of(b.up[s.o], s.l) + 1, x);
  b.down[s.t].insert(b.down[s.t].begin() + pos_top + 1, x);
  b.up[x] = {s.t};
  b.down[x] = {s.o};
  PlanarDiagram out = b.finish();
  std::vector<Elem> map(d.size());
  std::iota(map.begin(), map.end(), 0);
  Embedding e(d.lattice(), out.lattice(), std::move(map));
  return EyeInsertion{std::move(out), std::move(e), x};
}

EyeRemoval remove_eye(const PlanarDiagram& d, Elem eye) {
  auto es = eyes(d);
  if (std::find(es.begin(), es.end(), eye) == es.end())
    fail(ErrorCode::NotAnEye, "element " + std::to_string(eye) + " is not an eye");
  const Lattice& l = d.lattice();
  std::vector<Elem> old_to_new(l.size());
  for (Elem x = 0; x < l.size(); ++x) old_to_new[x] = x < eye ? x : x - 1;
  old_to_new[eye] = -1;

  std::vector<std::vector<Elem>> up, down;
  for (Elem x = 0; x < l.size(); ++x) {
    if (x == eye) continue;
    std::vector<Elem> u, dn;
    for (Elem y : d.up_order(x))
      if (y != eye) u.push_back(old_to_new[y]);
    for (Elem y : d.down_order(x))
      if (y != eye) dn.push_back(old_to_new[y]);
    up.push_back(std::move(u));
    down.push_back(std::move(dn));
  }
  std::vector<CoverPair> covers;
  for (Elem x = 0; x < static_cast<Elem>(up.size()); ++x)
    for (Elem y : up[x]) covers.emplace_back(x, y);
  Lattice smaller = Lattice::from_covers(l.size() - 1, std::move(covers));
  return EyeRemoval{PlanarDiagram(std::move(smaller), std::move(up), std::move(down)),
                    std::move(old_to_new)};
}

PlanarDiagram slim_down(const PlanarDiagram& d) {
  PlanarDiagram cur = d;
  for (;;) {
    auto es = eyes(cur);
    if (es.empty()) return cur;
    cur = remove_eye(cur, es.front()).diagram;
  }
}

namespace {

// One downward propagation run of a fork insertion. v is the freshly
// inserted element sitting in the former prime interval [u, w]; while the
// square below on the descent side exists, split its left (resp. right)
// edge and keep descending.
IntervalRef descend(DiagramBuilder& b, const Lattice& original, Elem v, Elem u, Elem w,
                    bool leftward) {
  for (;;) {
    const std::vector<Elem>& below_w = b.down[w];
    int i = index_of(below_w, v);
    if (i < 0) throw std::logic_error("fork descent lost its position");
    int zi = leftward ? i - 1 : i + 1;
    if (zi < 0 || zi >= static_cast<int>(below_w.size())) break;  // reached the boundary
    Elem z = below_w[zi];
    Elem x = original.meet(u, z);
    if (original.join(u, z) != w || index_of(b.up[x], z) < 0 || index_of(b.up[x], u) < 0)
      throw std::logic_error("fork descent found no covering square below " +
                             std::to_string(v));
    Elem y = b.add_element();
    replace_in(b.up[x], z, y);
    replace_in(b.down[z], x, y);
    b.up[y] = leftward ? std::vector<Elem>{z, v} : std::vector<Elem>{v, z};
    b.down[y] = {x};
    int ui = index_of(b.down[v], u);
    b.down[v].insert(b.down[v].begin() + (leftward ? ui : ui + 1), y);
    v = y;
    w = z;
    u = x;
  }
  return IntervalRef{u, v};
}

}  // namespace

ForkResult insert_fork(const PlanarDiagram& d, const CoveringSquare& s) {
  if (!is_slim(d)) fail(ErrorCode::NotSlim, "fork insertion needs a slim diagram");
  square_at(d, s.o, s.l, s.r, s.t);

  DiagramBuilder b(d);
  int pos_top = index_of(b.down[s.t], s.l);
  if (pos_top < 0 || b.down[s.t][pos_top + 1] != s.r)
    fail(ErrorCode::NotACoveringSquare, "square sides are not adjacent below the top");

  Elem a = b.add_element(), a2 = b.add_element(), c = b.add_element();
  // the square becomes a copy of the seven-element fork core
  int pos_base = index_of(b.up[s.o], s.l);
  b.up[s.o][pos_base] = a;
  b.up[s.o][pos_base + 1] = a2;
  b.up[a] = {s.l, c};
  b.up[a2] = {c, s.r};
  b.up[c] = {s.t};
  b.down[a] = {s.o};
  b.down[a2] = {s.o};
  b.down[c] = {a, a2};
  replace_in(b.down[s.l], s.o, a);
  replace_in(b.down[s.r], s.o, a2);
  b.down[s.t].insert(b.down[s.t].begin() + pos_top + 1, c);

  IntervalRef left_terminal = descend(b, d.lattice(), a, s.o, s.l, true);
  IntervalRef right_terminal = descend(b, d.lattice(), a2, s.o, s.r, false);

  PlanarDiagram out = b.finish();
  std::vector<Elem> map(d.size());
  std::iota(map.begin(), map.end(), 0);
  Embedding e(d.lattice(), out.lattice(), std::move(map));
  std::vector<Elem> fresh;
  for (Elem x = d.size(); x < out.size(); ++x) fresh.push_back(x);
  return ForkResult{std::move(out), std::move(e), std::move(fresh), left_terminal,
                    right_terminal};
}

std::pair<int, int> count_ji_congruences_delta(const PlanarDiagram& d, const CoveringSquare& s) {
  auto count = [](const Lattice& l) {
    ConLattice cl = ConLattice::of(l);
    int n = 0;
    for (int i = 0; i < cl.size(); ++i)
      if (cl.join_irreducible(i)) ++n;
    return n;
  };
  int before = count(d.lattice());
  int after = count(insert_fork(d, s).diagram.lattice());
  return {before, after};
}

}  // namespace rectlat
