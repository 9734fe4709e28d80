#include "oracles.hpp"

#include <algorithm>
#include <set>

namespace rectlat::testing {

namespace {

// restricted-growth strings enumerate set partitions exactly once
void enumerate_partitions(int i, int max_label, std::vector<Elem>& label, const Lattice& l,
                          std::vector<Congruence>& out) {
  if (i == l.size()) {
    Congruence c(l.size(), label);
    if (satisfies_substitution(l, c)) out.push_back(std::move(c));
    return;
  }
  for (int v = 0; v <= max_label + 1; ++v) {
    label[i] = v;
    enumerate_partitions(i + 1, std::max(max_label, v), label, l, out);
  }
}

}  // namespace

std::vector<Congruence> all_congruences_bruteforce(const Lattice& l) {
  std::vector<Elem> label(l.size(), 0);
  std::vector<Congruence> out;
  if (l.size() == 1) {
    out.push_back(Congruence::identity(1));
    return out;
  }
  enumerate_partitions(1, 0, label, l, out);
  return out;
}

Congruence generated_congruence_bruteforce(const Lattice& l,
                                           const std::vector<std::pair<Elem, Elem>>& pairs) {
  std::vector<Congruence> all = all_congruences_bruteforce(l);
  Congruence acc = Congruence::all(l.size());
  for (const Congruence& c : all) {
    bool contains = true;
    for (auto [a, b] : pairs) contains = contains && c.collapses(a, b);
    if (contains) acc = congruence_meet(acc, c);
  }
  return acc;
}

bool same_congruence_sets(const std::vector<Congruence>& a, const std::vector<Congruence>& b) {
  std::set<std::vector<Elem>> sa, sb;
  for (const Congruence& c : a) sa.insert(c.block_of);
  for (const Congruence& c : b) sb.insert(c.block_of);
  return sa == sb;
}

}  // namespace rectlat::testing
