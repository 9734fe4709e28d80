#include "rectlat/lattice.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <set>

namespace rectlat {

namespace {

std::string pair_str(Elem a, Elem b) {
  return "(" + std::to_string(a) + ", " + std::to_string(b) + ")";
}

}  // namespace

Lattice Lattice::from_covers(int n, std::vector<CoverPair> cover_pairs) {
  if (n <= 0) fail(ErrorCode::NotALattice, "element count must be positive");
  for (auto [a, b] : cover_pairs) {
    if (a < 0 || a >= n || b < 0 || b >= n)
      fail(ErrorCode::NotALattice, "cover id out of range " + pair_str(a, b));
    if (a == b) fail(ErrorCode::NotHasse, "reflexive cover pair " + pair_str(a, b));
  }
  std::sort(cover_pairs.begin(), cover_pairs.end());
  if (std::adjacent_find(cover_pairs.begin(), cover_pairs.end()) != cover_pairs.end())
    fail(ErrorCode::NotHasse, "duplicate cover pair");

  Lattice l;
  l.n_ = n;
  l.covers_ = std::move(cover_pairs);
  l.up_.assign(n, {});
  l.down_.assign(n, {});
  for (auto [a, b] : l.covers_) {
    l.up_[a].push_back(b);
    l.down_[b].push_back(a);
  }

  // topological order (Kahn); a cycle means the covers do not define an order
  std::vector<int> indeg(n);
  for (Elem x = 0; x < n; ++x) indeg[x] = static_cast<int>(l.down_[x].size());
  std::vector<Elem> topo;
  topo.reserve(n);
  for (Elem x = 0; x < n; ++x)
    if (indeg[x] == 0) topo.push_back(x);
  for (size_t i = 0; i < topo.size(); ++i) {
    for (Elem y : l.up_[topo[i]])
      if (--indeg[y] == 0) topo.push_back(y);
  }
  if (static_cast<int>(topo.size()) != n)
    fail(ErrorCode::NotALattice, "cover relation contains a cycle");

  // up-sets as bit rows, bottom-up over the reversed topological order
  const int words = (n + 63) / 64;
  l.upset_.assign(n, std::vector<std::uint64_t>(words, 0));
  for (auto it = topo.rbegin(); it != topo.rend(); ++it) {
    Elem x = *it;
    l.upset_[x][x >> 6] |= 1ull << (x & 63);
    for (Elem y : l.up_[x])
      for (int w = 0; w < words; ++w) l.upset_[x][w] |= l.upset_[y][w];
  }

  // Hasse minimality: no cover pair may be implied through a third element
  for (auto [a, b] : l.covers_) {
    for (Elem c : l.up_[a]) {
      if (c != b && l.leq(c, b))
        fail(ErrorCode::NotHasse, "cover " + pair_str(a, b) + " is transitively implied");
    }
  }

  int minimal = 0, maximal = 0;
  for (Elem x = 0; x < n; ++x) {
    if (l.down_[x].empty()) {
      l.bottom_ = x;
      ++minimal;
    }
    if (l.up_[x].empty()) {
      l.top_ = x;
      ++maximal;
    }
  }
  if (minimal != 1 || maximal != 1)
    fail(ErrorCode::Disconnected, "expected a unique bottom and top, found " +
                                      std::to_string(minimal) + " minimal and " +
                                      std::to_string(maximal) + " maximal elements");

  l.height_.assign(n, 0);
  for (Elem x : topo)
    for (Elem y : l.up_[x]) l.height_[y] = std::max(l.height_[y], l.height_[x] + 1);

  // join/meet tables; the minimal common bound must be unique
  l.join_.assign(static_cast<size_t>(n) * n, 0);
  l.meet_.assign(static_cast<size_t>(n) * n, 0);
  std::vector<std::uint64_t> common(words);
  auto bound = [&](Elem a, Elem b, bool joins) -> Elem {
    Elem best = -1;
    for (int w = 0; w < words; ++w) common[w] = l.upset_[a][w] & l.upset_[b][w];
    if (!joins) {
      // common lower bounds: elements whose up-set contains both a and b
      for (Elem c = 0; c < n; ++c)
        if (l.leq(c, a) && l.leq(c, b) && (best < 0 || l.height_[c] > l.height_[best])) best = c;
      for (Elem c = 0; c < n; ++c)
        if (l.leq(c, a) && l.leq(c, b) && !l.leq(c, best)) return -1;
      return best;
    }
    for (int w = 0; w < words; ++w) {
      std::uint64_t bits = common[w];
      while (bits) {
        Elem c = (w << 6) + std::countr_zero(bits);
        bits &= bits - 1;
        if (best < 0 || l.height_[c] < l.height_[best]) best = c;
      }
    }
    for (int w = 0; w < words; ++w) {
      std::uint64_t bits = common[w];
      while (bits) {
        Elem c = (w << 6) + std::countr_zero(bits);
        bits &= bits - 1;
        if (!l.leq(best, c)) return -1;
      }
    }
    return best;
  };
  for (Elem a = 0; a < n; ++a) {
    for (Elem b = a; b < n; ++b) {
      Elem j = bound(a, b, true);
      if (j < 0) fail(ErrorCode::NotALattice, "pair " + pair_str(a, b) + " has no unique join");
      Elem m = bound(a, b, false);
      if (m < 0) fail(ErrorCode::NotALattice, "pair " + pair_str(a, b) + " has no unique meet");
      l.join_[a * n + b] = l.join_[b * n + a] = j;
      l.meet_[a * n + b] = l.meet_[b * n + a] = m;
    }
  }
  return l;
}

bool Lattice::covers(Elem a, Elem b) const {
  return std::binary_search(up_[a].begin(), up_[a].end(), b);
}

std::vector<Elem> Lattice::ideal(Elem a) const {
  std::vector<Elem> out;
  for (Elem x = 0; x < n_; ++x)
    if (leq(x, a)) out.push_back(x);
  return out;
}

std::vector<Elem> Lattice::filter(Elem a) const {
  std::vector<Elem> out;
  for (Elem x = 0; x < n_; ++x)
    if (leq(a, x)) out.push_back(x);
  return out;
}

Persp perspectivity(const Lattice& l, IntervalRef p, IntervalRef q) {
  if (!l.covers(p.lo, p.hi)) fail(ErrorCode::NotPrime, "interval is not prime");
  if (!l.covers(q.lo, q.hi)) fail(ErrorCode::NotPrime, "interval is not prime");
  if (l.meet(p.hi, q.lo) == p.lo && l.join(p.hi, q.lo) == q.hi) return Persp::Up;
  if (l.join(p.lo, q.hi) == p.hi && l.meet(p.lo, q.hi) == q.lo) return Persp::Down;
  return Persp::None;
}

std::optional<std::vector<Elem>> interval_chain(const Lattice& l, Elem lo, Elem hi) {
  if (!l.leq(lo, hi)) throw std::invalid_argument("interval_chain: lo is not below hi");
  std::vector<Elem> elems;
  for (Elem x = 0; x < l.size(); ++x)
    if (l.leq(lo, x) && l.leq(x, hi)) elems.push_back(x);
  std::sort(elems.begin(), elems.end(),
            [&](Elem a, Elem b) { return l.height(a) < l.height(b); });
  for (size_t i = 1; i < elems.size(); ++i)
    if (!l.leq(elems[i - 1], elems[i])) return std::nullopt;
  return elems;
}

bool is_semimodular(const Lattice& l) {
  for (Elem a = 0; a < l.size(); ++a)
    for (Elem b = 0; b < l.size(); ++b)
      if (l.covers(l.meet(a, b), a) && !l.covers(b, l.join(a, b))) return false;
  return true;
}

bool is_distributive(const Lattice& l) {
  const int n = l.size();
  for (Elem x = 0; x < n; ++x)
    for (Elem y = 0; y < n; ++y)
      for (Elem z = 0; z < n; ++z)
        if (l.meet(x, l.join(y, z)) != l.join(l.meet(x, y), l.meet(x, z))) return false;
  return true;
}

std::vector<Elem> join_irreducible_elements(const Lattice& l) {
  std::vector<Elem> out;
  for (Elem x = 0; x < l.size(); ++x)
    if (l.lower_covers(x).size() == 1) out.push_back(x);
  return out;
}

Embedding::Embedding(Lattice src, Lattice tgt, std::vector<Elem> m)
    : source(std::move(src)), target(std::move(tgt)), map(std::move(m)) {
  if (static_cast<int>(map.size()) != source.size())
    throw std::invalid_argument("embedding map has wrong size");
  std::set<Elem> seen;
  for (Elem y : map) {
    if (y < 0 || y >= target.size()) throw std::invalid_argument("embedding image out of range");
    if (!seen.insert(y).second) throw std::invalid_argument("embedding map is not injective");
  }
  for (Elem a = 0; a < source.size(); ++a)
    for (Elem b = a; b < source.size(); ++b) {
      if (map[source.join(a, b)] != target.join(map[a], map[b]) ||
          map[source.meet(a, b)] != target.meet(map[a], map[b]))
        throw std::invalid_argument("map does not preserve join/meet at pair (" +
                                    std::to_string(a) + ", " + std::to_string(b) + ")");
    }
}

Embedding Embedding::identity(const Lattice& l) {
  std::vector<Elem> m(l.size());
  std::iota(m.begin(), m.end(), 0);
  return Embedding(l, l, std::move(m));
}

Embedding compose(const Embedding& first, const Embedding& second) {
  if (!(first.target == second.source))
    throw std::invalid_argument("compose: embeddings do not chain");
  std::vector<Elem> m(first.source.size());
  for (Elem x = 0; x < first.source.size(); ++x) m[x] = second.map[first.map[x]];
  return Embedding(first.source, second.target, std::move(m));
}

namespace {

struct IsoSearch {
  const Lattice& a;
  const Lattice& b;
  std::vector<std::vector<Elem>> candidates;  // per a-element
  std::vector<Elem> order;                    // a-elements, most constrained first
  std::vector<Elem> map_ab;                   // -1 = unassigned
  std::vector<char> used_b;

  bool consistent(Elem x, Elem y) const {
    for (Elem z = 0; z < a.size(); ++z) {
      Elem w = map_ab[z];
      if (w < 0) continue;
      if (a.covers(x, z) != b.covers(y, w)) return false;
      if (a.covers(z, x) != b.covers(w, y)) return false;
    }
    return true;
  }

  bool extend(size_t k) {
    if (k == order.size()) return true;
    Elem x = order[k];
    for (Elem y : candidates[x]) {
      if (used_b[y] || !consistent(x, y)) continue;
      map_ab[x] = y;
      used_b[y] = 1;
      if (extend(k + 1)) return true;
      map_ab[x] = -1;
      used_b[y] = 0;
    }
    return false;
  }
};

}  // namespace

std::optional<std::vector<Elem>> lattice_isomorphism(const Lattice& a, const Lattice& b) {
  if (a.size() != b.size() || a.cover_pairs().size() != b.cover_pairs().size())
    return std::nullopt;
  const int n = a.size();
  auto sig = [](const Lattice& l, Elem x) {
    return std::tuple<int, size_t, size_t>(l.height(x), l.upper_covers(x).size(),
                                           l.lower_covers(x).size());
  };
  IsoSearch s{a, b, {}, {}, std::vector<Elem>(n, -1), std::vector<char>(n, 0)};
  s.candidates.assign(n, {});
  for (Elem x = 0; x < n; ++x)
    for (Elem y = 0; y < n; ++y)
      if (sig(a, x) == sig(b, y)) s.candidates[x].push_back(y);
  s.order.resize(n);
  std::iota(s.order.begin(), s.order.end(), 0);
  std::sort(s.order.begin(), s.order.end(), [&](Elem x, Elem y) {
    if (s.candidates[x].size() != s.candidates[y].size())
      return s.candidates[x].size() < s.candidates[y].size();
    return x < y;
  });
  for (Elem x = 0; x < n; ++x)
    if (s.candidates[x].empty()) return std::nullopt;
  if (!s.extend(0)) return std::nullopt;
  return s.map_ab;
}

bool is_isomorphic(const Lattice& a, const Lattice& b) {
  return lattice_isomorphism(a, b).has_value();
}

}  // namespace rectlat
