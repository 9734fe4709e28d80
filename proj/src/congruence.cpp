#include "rectlat/congruence.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <set>

namespace rectlat {

namespace {

// Dense union-find with path halving; leaders are canonicalized to the least
// block element only when the final partition is extracted.
struct UnionFind {
  std::vector<Elem> parent;
  std::vector<int> size;

  explicit UnionFind(int n) : parent(n), size(n, 1) { std::iota(parent.begin(), parent.end(), 0); }

  Elem find(Elem i) {
    while (parent[i] != i) i = parent[i] = parent[parent[i]];
    return i;
  }

  bool unite(Elem i, Elem j) {
    Elem pi = find(i), pj = find(j);
    if (pi == pj) return false;
    if (size[pi] < size[pj]) std::swap(pi, pj);
    parent[pj] = pi;
    size[pi] += size[pj];
    return true;
  }

  std::vector<Elem> canonical() {
    std::vector<Elem> leader(parent.size(), -1);
    std::vector<Elem> out(parent.size());
    for (Elem x = 0; x < static_cast<Elem>(parent.size()); ++x) {
      Elem r = find(x);
      if (leader[r] < 0) leader[r] = x;  // ids ascend, so the first hit is the least
      out[x] = leader[r];
    }
    return out;
  }
};

}  // namespace

Congruence::Congruence(int size, std::vector<Elem> labels) : n(size), block_of(std::move(labels)) {
  std::vector<Elem> leader(n, -1);
  for (Elem x = 0; x < n; ++x) {
    Elem b = block_of[x];
    if (leader[b] < 0) leader[b] = x;
    block_of[x] = leader[b];
  }
}

Congruence Congruence::identity(int n) {
  std::vector<Elem> labels(n);
  std::iota(labels.begin(), labels.end(), 0);
  return Congruence(n, std::move(labels));
}

Congruence Congruence::all(int n) { return Congruence(n, std::vector<Elem>(n, 0)); }

bool Congruence::refines(const Congruence& coarser) const {
  for (Elem x = 0; x < n; ++x)
    if (coarser.block_of[x] != coarser.block_of[block_of[x]]) return false;
  return true;
}

int Congruence::num_blocks() const {
  int count = 0;
  for (Elem x = 0; x < n; ++x)
    if (block_of[x] == x) ++count;
  return count;
}

std::vector<std::vector<Elem>> Congruence::blocks() const {
  std::map<Elem, std::vector<Elem>> by_leader;
  for (Elem x = 0; x < n; ++x) by_leader[block_of[x]].push_back(x);
  std::vector<std::vector<Elem>> out;
  for (auto& [leader, block] : by_leader) out.push_back(std::move(block));
  return out;
}

bool Congruence::operator<(const Congruence& other) const {
  int a = num_blocks(), b = other.num_blocks();
  if (a != b) return a < b;
  return block_of < other.block_of;
}

std::string to_string(const Congruence& c) {
  std::string out;
  for (const auto& block : c.blocks()) {
    out += "{";
    for (size_t i = 0; i < block.size(); ++i) {
      if (i) out += ",";
      out += std::to_string(block[i]);
    }
    out += "}";
  }
  return out;
}

PartialCongruence PartialCongruence::identity_on(std::vector<Elem> domain) {
  PartialCongruence p;
  p.block_of = domain;
  p.domain = std::move(domain);
  return p;
}

bool PartialCongruence::same_block(Elem x, Elem y) const {
  Elem bx = -1, by = -1;
  for (size_t i = 0; i < domain.size(); ++i) {
    if (domain[i] == x) bx = block_of[i];
    if (domain[i] == y) by = block_of[i];
  }
  if (bx < 0 || by < 0) throw std::invalid_argument("element outside the partial domain");
  return bx == by;
}

std::string to_string(const PartialCongruence& c) {
  std::map<Elem, std::vector<Elem>> by_leader;
  for (size_t i = 0; i < c.domain.size(); ++i) by_leader[c.block_of[i]].push_back(c.domain[i]);
  std::string out;
  for (auto& [leader, block] : by_leader) {
    std::sort(block.begin(), block.end());
    out += "{";
    for (size_t i = 0; i < block.size(); ++i) {
      if (i) out += ",";
      out += std::to_string(block[i]);
    }
    out += "}";
  }
  return out;
}

bool satisfies_substitution(const Lattice& l, const Congruence& c) {
  const int n = l.size();
  for (Elem x = 0; x < n; ++x)
    for (Elem y = x + 1; y < n; ++y) {
      if (!c.collapses(x, y)) continue;
      for (Elem z = 0; z < n; ++z) {
        if (!c.collapses(l.join(x, z), l.join(y, z))) return false;
        if (!c.collapses(l.meet(x, z), l.meet(y, z))) return false;
      }
    }
  return true;
}

Congruence generated_congruence(const Lattice& l,
                                const std::vector<std::pair<Elem, Elem>>& pairs) {
  const int n = l.size();
  UnionFind uf(n);
  std::deque<std::pair<Elem, Elem>> queue(pairs.begin(), pairs.end());
  while (!queue.empty()) {
    auto [a, b] = queue.front();
    queue.pop_front();
    if (!uf.unite(a, b)) continue;
    for (Elem z = 0; z < n; ++z) {
      Elem ja = l.join(a, z), jb = l.join(b, z);
      if (uf.find(ja) != uf.find(jb)) queue.emplace_back(ja, jb);
      Elem ma = l.meet(a, z), mb = l.meet(b, z);
      if (uf.find(ma) != uf.find(mb)) queue.emplace_back(ma, mb);
    }
  }
  return Congruence(n, uf.canonical());
}

Congruence principal_congruence(const Lattice& l, Elem a, Elem b) {
  return generated_congruence(l, {{a, b}});
}

namespace {

std::vector<std::pair<Elem, Elem>> collapse_pairs(const Congruence& c) {
  std::vector<std::pair<Elem, Elem>> pairs;
  for (Elem x = 0; x < c.n; ++x)
    if (c.block_of[x] != x) pairs.emplace_back(c.block_of[x], x);
  return pairs;
}

}  // namespace

Congruence congruence_join(const Lattice& l, const Congruence& a, const Congruence& b) {
  auto pairs = collapse_pairs(a);
  auto more = collapse_pairs(b);
  pairs.insert(pairs.end(), more.begin(), more.end());
  return generated_congruence(l, pairs);
}

Congruence congruence_meet(const Congruence& a, const Congruence& b) {
  // blockwise intersection; the intersection of congruences is a congruence
  std::map<std::pair<Elem, Elem>, Elem> leaders;
  std::vector<Elem> labels(a.n);
  for (Elem x = 0; x < a.n; ++x) {
    auto key = std::make_pair(a.block_of[x], b.block_of[x]);
    auto it = leaders.find(key);
    if (it == leaders.end()) it = leaders.emplace(key, x).first;
    labels[x] = it->second;
  }
  return Congruence(a.n, std::move(labels));
}

ConLattice ConLattice::of(const Lattice& l) {
  ConLattice cl(l);
  std::map<std::vector<Elem>, int> index;
  std::vector<Congruence> members;
  auto add = [&](Congruence c) {
    auto it = index.find(c.block_of);
    if (it != index.end()) return it->second;
    int id = static_cast<int>(members.size());
    index.emplace(c.block_of, id);
    members.push_back(std::move(c));
    return id;
  };
  add(Congruence::identity(l.size()));
  std::vector<int> cover_con;
  for (auto [a, b] : l.cover_pairs()) cover_con.push_back(add(principal_congruence(l, a, b)));

  // close under joins
  for (size_t i = 0; i < members.size(); ++i)
    for (size_t j = 0; j < i; ++j) {
      Congruence joined = congruence_join(l, members[i], members[j]);
      add(std::move(joined));  // appending extends the loop bound
    }

  // canonical order, then remap the cover table
  std::vector<int> perm(members.size());
  std::iota(perm.begin(), perm.end(), 0);
  std::sort(perm.begin(), perm.end(),
            [&](int x, int y) { return members[x] < members[y]; });
  std::vector<int> where(members.size());
  for (size_t pos = 0; pos < perm.size(); ++pos) where[perm[pos]] = static_cast<int>(pos);
  std::vector<Congruence> sorted;
  sorted.reserve(members.size());
  for (int old : perm) sorted.push_back(std::move(members[old]));
  cl.members_ = std::move(sorted);
  cl.cover_con_.resize(cover_con.size());
  for (size_t k = 0; k < cover_con.size(); ++k) cl.cover_con_[k] = where[cover_con[k]];

  const int g = cl.size();
  cl.join_.assign(static_cast<size_t>(g) * g, -1);
  cl.meet_.assign(static_cast<size_t>(g) * g, -1);
  auto find_index = [&](const Congruence& c) {
    for (int k = 0; k < g; ++k)
      if (cl.members_[k] == c) return k;
    throw std::logic_error("congruence lattice is not closed");
  };
  for (int i = 0; i < g; ++i)
    for (int j = i; j < g; ++j) {
      int jn = find_index(congruence_join(l, cl.members_[i], cl.members_[j]));
      int mt = find_index(congruence_meet(cl.members_[i], cl.members_[j]));
      cl.join_[i * g + j] = cl.join_[j * g + i] = jn;
      cl.meet_[i * g + j] = cl.meet_[j * g + i] = mt;
    }

  cl.ji_.assign(g, 0);
  for (int i = 0; i < g; ++i) {
    if (cl.members_[i].num_blocks() == l.size()) {
      cl.identity_ = i;
      continue;  // identity is not join-irreducible
    }
    int acc = -1;
    for (int j = 0; j < g; ++j) {
      if (j == i || !cl.leq(j, i)) continue;
      acc = acc < 0 ? j : cl.join(acc, j);
    }
    cl.ji_[i] = (acc < 0 || acc != i);
  }
  for (int i = 0; i < g; ++i)
    if (cl.members_[i].num_blocks() == 1) cl.all_ = i;
  return cl;
}

int ConLattice::index_of(const Congruence& c) const {
  for (int i = 0; i < size(); ++i)
    if (members_[i] == c) return i;
  return -1;
}

int ConLattice::principal_index(Elem a, Elem b) const {
  Elem lo = lattice_.meet(a, b), hi = lattice_.join(a, b);
  int acc = identity_;
  Elem cur = lo;
  while (cur != hi) {
    Elem next = -1;
    for (Elem c : lattice_.upper_covers(cur))
      if (lattice_.leq(c, hi)) {
        next = c;
        break;
      }
    auto& pairs = lattice_.cover_pairs();
    auto it = std::lower_bound(pairs.begin(), pairs.end(), CoverPair{cur, next});
    acc = join(acc, cover_con_[it - pairs.begin()]);
    cur = next;
  }
  return acc;
}

Lattice ConLattice::order_lattice() const {
  std::vector<CoverPair> covers;
  const int g = size();
  for (int i = 0; i < g; ++i)
    for (int j = 0; j < g; ++j) {
      if (i == j || !leq(i, j)) continue;
      bool is_cover = true;
      for (int k = 0; k < g && is_cover; ++k)
        if (k != i && k != j && leq(i, k) && leq(k, j)) is_cover = false;
      if (is_cover) covers.emplace_back(i, j);
    }
  return Lattice::from_covers(g, std::move(covers));
}

AllPrincipalResult is_all_principal(const Lattice& l) {
  ConLattice cl = ConLattice::of(l);
  std::vector<char> principal(cl.size(), 0);
  for (Elem a = 0; a < l.size(); ++a)
    for (Elem b = 0; b < l.size(); ++b)
      if (l.leq(a, b)) principal[cl.principal_index(a, b)] = 1;
  for (int i = 0; i < cl.size(); ++i)
    if (!principal[i]) return AllPrincipalResult{false, cl.members()[i]};
  return AllPrincipalResult{true, std::nullopt};
}

std::optional<std::pair<Elem, Elem>> principal_witness(const ConLattice& cl,
                                                       const Congruence& c) {
  int want = cl.index_of(c);
  if (want < 0) return std::nullopt;
  const Lattice& l = cl.base();
  for (Elem a = 0; a < l.size(); ++a)
    for (Elem b = 0; b < l.size(); ++b)
      if (l.leq(a, b) && cl.principal_index(a, b) == want) return std::make_pair(a, b);
  return std::nullopt;
}

PartialCongruence restrict_to(const Congruence& c, const std::vector<Elem>& domain) {
  PartialCongruence p;
  p.domain = domain;
  p.block_of.resize(domain.size());
  std::map<Elem, Elem> leader;  // full-block leader -> least domain element
  for (Elem x : domain) {
    auto it = leader.find(c.block_of[x]);
    if (it == leader.end())
      leader.emplace(c.block_of[x], x);
    else
      it->second = std::min(it->second, x);
  }
  for (size_t i = 0; i < domain.size(); ++i) p.block_of[i] = leader[c.block_of[domain[i]]];
  return p;
}

std::pair<PartialCongruence, PartialCongruence> boundary_pair(const PlanarDiagram& d,
                                                              const Congruence& c) {
  BoundaryChains bc = boundary_chains(d);
  return {restrict_to(c, bc.c_ll), restrict_to(c, bc.c_lr)};
}

Congruence reconstruct_from_pair(const PlanarDiagram& d, const PartialCongruence& pl,
                                 const PartialCongruence& pr) {
  BoundaryChains bc = boundary_chains(d);
  if (pl.domain != bc.c_ll || pr.domain != bc.c_lr)
    throw std::invalid_argument("partial congruences must live on the two lower boundary chains");
  std::vector<std::pair<Elem, Elem>> pairs;
  for (const PartialCongruence* p : {&pl, &pr})
    for (size_t i = 0; i < p->domain.size(); ++i)
      if (p->block_of[i] != p->domain[i]) pairs.emplace_back(p->block_of[i], p->domain[i]);
  return generated_congruence(d.lattice(), pairs);
}

Congruence pullback(const Embedding& e, const Congruence& target_congruence) {
  std::vector<Elem> labels(e.source.size());
  std::map<Elem, Elem> leader;
  for (Elem x = 0; x < e.source.size(); ++x) {
    Elem b = target_congruence.block_of[e.map[x]];
    auto it = leader.find(b);
    if (it == leader.end()) it = leader.emplace(b, x).first;
    labels[x] = it->second;
  }
  return Congruence(e.source.size(), std::move(labels));
}

Congruence extend_through(const Embedding& e, const Congruence& source_congruence) {
  std::vector<std::pair<Elem, Elem>> pairs;
  for (Elem x = 0; x < e.source.size(); ++x)
    if (source_congruence.block_of[x] != x)
      pairs.emplace_back(e.map[source_congruence.block_of[x]], e.map[x]);
  return generated_congruence(e.target, pairs);
}

bool is_congruence_preserving_extension(const Embedding& e) {
  ConLattice source_cons = ConLattice::of(e.source);
  ConLattice target_cons = ConLattice::of(e.target);
  if (source_cons.size() != target_cons.size()) return false;
  std::set<std::vector<Elem>> images;
  for (const Congruence& t : target_cons.members()) {
    Congruence restricted = pullback(e, t);
    if (source_cons.index_of(restricted) < 0) return false;  // cannot happen for embeddings
    if (!images.insert(restricted.block_of).second) return false;
  }
  return images.size() == static_cast<size_t>(source_cons.size());
}

bool is_cover_preserving_extension(const Embedding& e) {
  for (auto [a, b] : e.source.cover_pairs())
    if (!e.target.covers(e.map[a], e.map[b])) return false;
  return true;
}

std::vector<Congruence> join_decomposition(const ConLattice& cl, const Congruence& c) {
  int idx = cl.index_of(c);
  if (idx < 0) throw std::invalid_argument("congruence is not a member of the lattice");
  std::vector<int> below;
  for (int j = 0; j < cl.size(); ++j)
    if (cl.join_irreducible(j) && cl.leq(j, idx)) below.push_back(j);
  std::vector<Congruence> out;
  for (int j : below) {
    bool maximal = true;
    for (int k : below)
      if (k != j && cl.leq(j, k)) maximal = false;
    if (maximal) out.push_back(cl.members()[j]);
  }
  return out;  // indices ascend, so the canonical order is preserved
}

}  // namespace rectlat
