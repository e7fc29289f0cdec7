#include "pdbep/greedy.hpp"

#include <algorithm>

#include "pdbep/errors.hpp"
#include "pdbep/rng.hpp"

namespace pdbep::greedy {

namespace {

std::vector<EdgeId> resolve_order(const Instance& inst,
                                  const std::vector<EdgeId>& order) {
  if (order.empty()) {
    std::vector<EdgeId> natural(inst.edge_count());
    for (EdgeId e = 0; e < natural.size(); ++e) natural[e] = e;
    return natural;
  }
  if (order.size() != inst.edge_count()) {
    throw ParameterError("visit order must cover every edge exactly once");
  }
  std::vector<char> seen(inst.edge_count(), 0);
  for (EdgeId e : order) {
    if (e >= inst.edge_count() || seen[e]) {
      throw ParameterError("visit order is not a permutation of edge ids");
    }
    seen[e] = 1;
  }
  return order;
}

}  // namespace

std::pair<EdgePacking, AdditionTrace> edge_addition(
    const Instance& inst, const std::vector<EdgeId>& order) {
  AdditionTrace trace;
  trace.visit_order = resolve_order(inst, order);

  const std::size_t n = inst.vertex_count();
  std::vector<long long> deg(n, 0);
  std::vector<std::vector<EdgeId>> chosen_at(n);
  std::vector<char> in_y(inst.edge_count(), 0);

  // An edge goes in iff the grown set stays feasible. Only edges touching
  // an endpoint pushed over its bound need rechecking.
  auto endpoint_ok = [&](VertexId w, VertexId mate) {
    // w's degree after the candidate edge lands.
    if (deg[w] + 1 <= inst.bound(w)) return true;
    for (EdgeId f : chosen_at[w]) {
      VertexId x = inst.edge(f).u == w ? inst.edge(f).v : inst.edge(f).u;
      long long dx = deg[x] + (x == mate ? 1 : 0);
      if (dx > inst.bound(x)) return false;
    }
    return true;
  };

  std::vector<EdgeId> y_ids;
  for (EdgeId e : trace.visit_order) {
    const Edge& ed = inst.edge(e);
    bool self_ok = deg[ed.u] + 1 <= inst.bound(ed.u) ||
                   deg[ed.v] + 1 <= inst.bound(ed.v);
    if (!self_ok || !endpoint_ok(ed.u, ed.v) || !endpoint_ok(ed.v, ed.u)) {
      continue;
    }
    ++deg[ed.u];
    ++deg[ed.v];
    chosen_at[ed.u].push_back(e);
    chosen_at[ed.v].push_back(e);
    in_y[e] = 1;
    y_ids.push_back(e);
  }
  trace.maximal = EdgePacking(y_ids);

  // Vertices the pass left short get padded with their smallest-id unused
  // incident edges. Those edges are pairwise distinct: an unused edge
  // between two deficient vertices would have been addable.
  for (VertexId v = 0; v < n; ++v) {
    if (deg[v] < inst.bound(v)) trace.deficient.push_back(v);
  }
  std::vector<char> in_z(inst.edge_count(), 0);
  std::vector<EdgeId> z_ids;
  for (VertexId v : trace.deficient) {
    long long need = inst.bound(v) - deg[v];
    for (EdgeId f : inst.incident(v)) {
      if (need == 0) break;
      if (in_y[f]) continue;
      if (in_z[f]) {
        throw SolverError("padding edges collided at edge " +
                          std::to_string(f));
      }
      in_z[f] = 1;
      z_ids.push_back(f);
      --need;
    }
    if (need != 0) {
      throw SolverError("vertex " + std::to_string(v) +
                        " lacks unused incident edges for padding");
    }
  }
  trace.supplement = EdgePacking(z_ids);

  trace.chose_maximal = trace.maximal.size() >= trace.supplement.size();
  EdgePacking result = trace.chose_maximal ? trace.maximal : trace.supplement;
  return {std::move(result), std::move(trace)};
}

EdgePacking edge_deletion(const Instance& inst,
                          const std::vector<EdgeId>& order) {
  std::vector<EdgeId> visit = resolve_order(inst, order);
  const std::size_t n = inst.vertex_count();
  std::vector<long long> deg(n);
  for (VertexId v = 0; v < n; ++v) deg[v] = inst.degree(v);

  std::vector<char> alive(inst.edge_count(), 1);
  for (EdgeId e : visit) {
    const Edge& ed = inst.edge(e);
    if (deg[ed.u] > inst.bound(ed.u) && deg[ed.v] > inst.bound(ed.v)) {
      alive[e] = 0;
      --deg[ed.u];
      --deg[ed.v];
    }
  }
  std::vector<EdgeId> kept;
  for (EdgeId e = 0; e < inst.edge_count(); ++e) {
    if (alive[e]) kept.push_back(e);
  }
  return EdgePacking(kept);
}

std::vector<EdgeId> shuffled_order(const Instance& inst, std::uint64_t seed) {
  std::vector<EdgeId> order(inst.edge_count());
  for (EdgeId e = 0; e < order.size(); ++e) order[e] = e;
  SplitMix64 rng(seed);
  rng.shuffle(order);
  return order;
}

}  // namespace pdbep::greedy
