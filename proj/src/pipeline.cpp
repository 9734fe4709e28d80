#include "rectlat/pipeline.hpp"

#include <algorithm>
#include <optional>

namespace rectlat {

PlanarDiagram diagonal_eye_grid(int d_len) {
  if (d_len < 1) throw std::invalid_argument("the mirrored chain needs at least one step");
  const int stride = d_len + 1;
  PlanarDiagram cur = grid(stride, stride);
  for (int i = 0; i < d_len; ++i) {
    Elem o = i * stride + i;
    Elem l = (i + 1) * stride + i;
    Elem r = i * stride + (i + 1);
    Elem t = (i + 1) * stride + (i + 1);
    cur = insert_eye(cur, square_at(cur, o, l, r, t)).diagram;
  }
  return cur;
}

Step2Result step2(const PlanarDiagram& k1) {
  if (!is_rectangular(k1)) fail(ErrorCode::NotRectangular, "stage requires rectangular input");
  BoundaryChains bc1 = boundary_chains(k1);
  PlanarDiagram mirror = diagonal_eye_grid(static_cast<int>(bc1.c_lr.size()) - 1);
  GlueResult g = glue(k1, mirror, GlueSide::LowerRight);

  ConLattice cons = ConLattice::of(g.glued.lattice());
  BoundaryChains bc2 = boundary_chains(g.glued);
  std::vector<char> in_k1(g.glued.size(), 0);
  for (Elem x : g.upper.map) in_k1[x] = 1;
  std::vector<int> step_con(bc2.c_ll.size() - 1);
  for (size_t j = 0; j + 1 < bc2.c_ll.size(); ++j)
    step_con[j] = cons.principal_index(bc2.c_ll[j], bc2.c_ll[j + 1]);

  std::vector<std::pair<Congruence, int>> witnesses;
  for (int i = 0; i < cons.size(); ++i) {
    if (!cons.join_irreducible(i)) continue;
    int best = -1;
    for (size_t j = 0; j < step_con.size(); ++j) {
      if (step_con[j] != i) continue;
      bool inside = in_k1[bc2.c_ll[j]] && in_k1[bc2.c_ll[j + 1]];
      if (inside) {
        best = static_cast<int>(j);
        break;
      }
      if (best < 0) best = static_cast<int>(j);
    }
    if (best < 0)
      fail(ErrorCode::WitnessMissing, "join-irreducible congruence " +
                                          to_string(cons.members()[i]) +
                                          " has no lower-left witness interval");
    witnesses.emplace_back(cons.members()[i], best);
  }
  return Step2Result{std::move(g.glued), std::move(g.upper), std::move(witnesses)};
}

ColumnLatticeResult column_lattice(int c_len, const std::vector<int>& positions) {
  if (c_len < 1) throw std::invalid_argument("the base chain needs at least one step");
  if (positions.empty()) throw std::invalid_argument("need at least one column");
  for (int p : positions)
    if (p < 0 || p >= c_len)
      fail(ErrorCode::PositionOutOfRange,
           "column position " + std::to_string(p) + " outside the chain of length " +
               std::to_string(c_len));
  const int n = static_cast<int>(positions.size());
  const int stride = n + 1;
  auto id = [stride](int x, int y) { return x * stride + y; };
  PlanarDiagram cur = direct_product(chain_diagram(c_len + 1), chain_diagram(n + 1));
  for (int i = 1; i <= n; ++i) {
    int p = positions[i - 1];
    cur = insert_eye(cur, square_at(cur, id(p, i - 1), id(p + 1, i - 1), id(p, i), id(p + 1, i)))
              .diagram;
  }
  IntervalRef witness{id(positions.back() + 1, 0), id(positions.back() + 1, n)};
  return ColumnLatticeResult{std::move(cur), witness};
}

Step3Result step3_one(const PlanarDiagram& k2, const Congruence& theta) {
  ConLattice cons = ConLattice::of(k2.lattice());
  int idx = cons.index_of(theta);
  if (idx < 0) throw std::invalid_argument("theta is not a congruence of the stage lattice");
  if (idx == cons.identity_index()) {
    // nothing to collapse; the trivial congruence is principal everywhere
    Elem b = k2.lattice().bottom();
    return Step3Result{k2, Embedding::identity(k2.lattice()), IntervalRef{b, b}};
  }
  std::vector<Congruence> parts = join_decomposition(cons, theta);
  BoundaryChains bc = boundary_chains(k2);
  const std::vector<Elem>& chain = bc.c_ll;
  std::vector<int> step_con(chain.size() - 1);
  for (size_t j = 0; j + 1 < chain.size(); ++j)
    step_con[j] = cons.principal_index(chain[j], chain[j + 1]);
  std::vector<int> positions;
  for (const Congruence& gamma : parts) {
    int want = cons.index_of(gamma);
    int found = -1;
    for (size_t j = 0; j < step_con.size(); ++j)
      if (step_con[j] == want) {
        found = static_cast<int>(j);
        break;
      }
    if (found < 0)
      fail(ErrorCode::WitnessMissing,
           "no lower-left prime interval generates " + to_string(gamma));
    positions.push_back(found);
  }
  ColumnLatticeResult col = column_lattice(static_cast<int>(chain.size()) - 1, positions);
  GlueResult g = glue(k2, col.diagram, GlueSide::LowerLeft);
  IntervalRef witness{g.lower.map[col.witness.lo], g.lower.map[col.witness.hi]};
  return Step3Result{std::move(g.glued), std::move(g.upper), witness};
}

Embedding PipelineTrace::total_embedding() const {
  Embedding total = stages.front().from_previous;  // identity on the input
  for (size_t i = 1; i < stages.size(); ++i) total = compose(total, stages[i].from_previous);
  return total;
}

PipelineTrace extend_all(const PlanarDiagram& l, const ExtendOptions& options) {
  if (!is_rectangular(l)) fail(ErrorCode::NotRectangular, "the pipeline requires rectangular input");
  ConLattice base_cons = ConLattice::of(l.lattice());

  PipelineTrace trace;
  trace.stages.push_back(PipelineStage{"input", l, Embedding::identity(l.lattice())});
  Step2Result s2 = step2(l);
  trace.stages.push_back(PipelineStage{"step2", s2.k2, s2.embedding});

  PlanarDiagram cur = s2.k2;
  Embedding total = s2.embedding;
  std::vector<std::optional<IntervalRef>> witnesses(base_cons.size());
  std::optional<ConLattice> cur_cons;

  for (int i = 0; i < base_cons.size(); ++i) {
    const Congruence& theta = base_cons.members()[i];
    Congruence lifted = extend_through(total, theta);
    if (!cur_cons) cur_cons = ConLattice::of(cur.lattice());
    if (options.skip_already_principal) {
      if (auto pair = principal_witness(*cur_cons, lifted)) {
        witnesses[i] = IntervalRef{pair->first, pair->second};
        continue;
      }
    }
    Step3Result s3 = step3_one(cur, lifted);
    for (auto& w : witnesses)
      if (w) *w = IntervalRef{s3.embedding.map[w->lo], s3.embedding.map[w->hi]};
    witnesses[i] = s3.witness;
    trace.stages.push_back(
        PipelineStage{"step3_" + std::to_string(i), s3.lattice, s3.embedding});
    total = compose(total, s3.embedding);
    cur = s3.lattice;
    cur_cons.reset();
  }

  for (int i = 0; i < base_cons.size(); ++i)
    trace.witness_intervals.emplace_back(base_cons.members()[i], *witnesses[i]);
  return trace;
}

ExtensionChecks verify_extension(const PipelineTrace& trace) {
  ExtensionChecks checks;
  const PlanarDiagram& final = trace.final_diagram();
  Embedding total = trace.total_embedding();
  checks.rectangular = is_rectangular(final);
  checks.cover_preserving = is_cover_preserving_extension(total);
  checks.congruence_preserving = is_congruence_preserving_extension(total);
  checks.all_principal = is_all_principal(final.lattice()).all_principal;
  checks.witnesses_valid = true;
  for (const auto& [theta, interval] : trace.witness_intervals) {
    Congruence expected = extend_through(total, theta);
    if (!(principal_congruence(final.lattice(), interval.lo, interval.hi) == expected))
      checks.witnesses_valid = false;
  }
  return checks;
}

namespace {

struct RepresentSearch {
  const Lattice& target;
  int target_size;
  int ji_target;
  std::optional<PlanarDiagram> found;
  std::vector<Elem> iso;  // Con(found) member index -> target element

  bool leaf(const PlanarDiagram& d) {
    ConLattice cons = ConLattice::of(d.lattice());
    if (cons.size() != target_size) return false;
    auto map = lattice_isomorphism(cons.order_lattice(), target);
    if (!map) return false;
    found = d;
    iso = *map;
    return true;
  }

  bool search(const PlanarDiagram& d, int forks, int eyes_left) {
    if (d.size() > 64) return false;
    if (forks == 0 && eyes_left == 0) return leaf(d);
    auto squares = covering_squares(d);
    if (forks > 0) {
      for (const CoveringSquare& s : squares)
        if (search(insert_fork(d, s).diagram, forks - 1, eyes_left)) return true;
      return false;
    }
    for (const CoveringSquare& s : squares)
      if (search(insert_eye(d, s).diagram, 0, eyes_left - 1)) return true;
    return false;
  }
};

}  // namespace

RepresentResult represent(const Lattice& d_spec, const RepresentOptions& options) {
  if (!is_distributive(d_spec))
    fail(ErrorCode::NotDistributive, "only distributive lattices are congruence lattices");
  int ji = static_cast<int>(join_irreducible_elements(d_spec).size());
  if (ji > options.ji_budget)
    fail(ErrorCode::SearchExhausted, "input has " + std::to_string(ji) +
                                         " join-irreducible elements, budget is " +
                                         std::to_string(options.ji_budget));

  RepresentSearch s{d_spec, d_spec.size(), ji, std::nullopt, {}};
  for (int total = 0; total <= options.insertion_budget && !s.found; ++total) {
    for (int m = 2; m <= 5 && !s.found; ++m)
      for (int n = 2; n <= 5 && !s.found; ++n) {
        int base = m + n - 2;
        for (int forks = 0; forks <= total && !s.found; ++forks) {
          int eyes_used = total - forks;
          if (base + forks < ji) continue;         // eyes never add congruences
          if (base + forks - eyes_used > ji) continue;  // each eye removes at most one
          s.search(grid(m, n), forks, eyes_used);
        }
      }
  }
  if (!s.found)
    fail(ErrorCode::SearchExhausted,
         "no generated lattice within the budget has the requested congruence lattice");

  PipelineTrace trace = extend_all(*s.found);
  ConLattice final_cons = ConLattice::of(trace.final_diagram().lattice());
  ConLattice k1_cons = ConLattice::of(s.found->lattice());
  Embedding total = trace.total_embedding();
  std::vector<Elem> con_to_spec(final_cons.size(), -1);
  for (int i = 0; i < final_cons.size(); ++i) {
    Congruence restricted = pullback(total, final_cons.members()[i]);
    int k1_index = k1_cons.index_of(restricted);
    if (k1_index < 0) throw std::logic_error("final congruence does not restrict to the base");
    con_to_spec[i] = s.iso[k1_index];
  }
  return RepresentResult{std::move(*s.found), std::move(trace), std::move(final_cons),
                         std::move(con_to_spec)};
}

Sidedness classify_ji_congruence(const PlanarDiagram& d, const Congruence& gamma) {
  ConLattice cons = ConLattice::of(d.lattice());
  int idx = cons.index_of(gamma);
  if (idx < 0 || !cons.join_irreducible(idx))
    fail(ErrorCode::NotJoinIrreducible, "classification needs a join-irreducible congruence");
  BoundaryChains bc = boundary_chains(d);
  auto witnessed = [&](const std::vector<Elem>& chain) {
    for (size_t j = 0; j + 1 < chain.size(); ++j)
      if (cons.principal_index(chain[j], chain[j + 1]) == idx) return true;
    return false;
  };
  bool left = witnessed(bc.c_ll), right = witnessed(bc.c_lr);
  if (left && !right) return Sidedness::LeftSided;
  if (right && !left) return Sidedness::RightSided;
  return Sidedness::TwoSided;
}

namespace {

void check_chain_congruence(const PartialCongruence& p, const std::vector<Elem>& chain,
                            const char* which) {
  if (p.domain != chain)
    throw std::invalid_argument(std::string("partial congruence does not live on the ") + which +
                                " boundary chain");
  // blocks of a chain congruence are convex
  for (size_t i = 0; i + 1 < p.block_of.size(); ++i)
    for (size_t j = i + 2; j < p.block_of.size(); ++j)
      if (p.block_of[i] == p.block_of[j] && p.block_of[i + 1] != p.block_of[i])
        throw std::invalid_argument("partition is not a congruence of the chain");
}

}  // namespace

bool is_compatible_pair(const PlanarDiagram& d, const PartialCongruence& bl,
                        const PartialCongruence& br) {
  BoundaryChains bc = boundary_chains(d);
  check_chain_congruence(bl, bc.c_ll, "lower-left");
  check_chain_congruence(br, bc.c_lr, "lower-right");
  Congruence closure = reconstruct_from_pair(d, bl, br);
  auto [rl, rr] = boundary_pair(d, closure);
  return rl == bl && rr == br;
}

}  // namespace rectlat
