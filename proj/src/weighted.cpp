#include "pdbep/weighted.hpp"

#include <algorithm>
#include <bit>

#include "pdbep/errors.hpp"

namespace pdbep::weighted {

HeavySets heavy_sets(const Instance& inst) {
  HeavySets sets;
  sets.per_vertex.resize(inst.vertex_count());
  for (VertexId v = 0; v < inst.vertex_count(); ++v) {
    std::vector<EdgeId> order = inst.incident(v);
    std::stable_sort(order.begin(), order.end(),
                     [&](EdgeId a, EdgeId b) {
                       const Rational wa = inst.weight(a);
                       const Rational wb = inst.weight(b);
                       if (wa != wb) return wa > wb;
                       return a < b;
                     });
    order.resize(static_cast<std::size_t>(inst.bound(v)));
    std::sort(order.begin(), order.end());
    sets.per_vertex[v] = std::move(order);
  }
  return sets;
}

Rational weighted_upper_bound(const Instance& inst) {
  HeavySets sets = heavy_sets(inst);
  Rational total = 0;
  for (const auto& hv : sets.per_vertex) {
    for (EdgeId e : hv) total += inst.weight(e);
  }
  return total;
}

PartitionSolveResult partition_solve(const Instance& inst) {
  const std::size_t n = inst.vertex_count();
  const std::size_t m = inst.edge_count();
  HeavySets sets = heavy_sets(inst);

  // heavy_end[e]: bit 0 set when e is heavy at its u, bit 1 at its v.
  std::vector<unsigned char> heavy_end(m, 0);
  for (VertexId v = 0; v < n; ++v) {
    for (EdgeId e : sets.per_vertex[v]) {
      heavy_end[e] |= inst.edge(e).u == v ? 1 : 2;
    }
  }

  PartitionSolveResult result;
  Partition& part = result.partition;
  part.bit_count = n >= 2 ? std::bit_width(n - 1) : 0;

  std::vector<EdgeId> core_ids;
  std::vector<std::vector<EdgeId>> fam_a(part.bit_count), fam_b(part.bit_count);
  for (EdgeId e = 0; e < m; ++e) {
    const Edge& ed = inst.edge(e);
    switch (heavy_end[e]) {
      case 3:
        core_ids.push_back(e);
        break;
      case 0:
        part.discarded.push_back(e);
        break;
      default: {
        Partition::CrossEdge ce;
        ce.e = e;
        ce.head = heavy_end[e] == 1 ? ed.u : ed.v;
        ce.tail = heavy_end[e] == 1 ? ed.v : ed.u;
        ce.bit = std::countr_zero(static_cast<unsigned long long>(ce.tail) ^
                                  static_cast<unsigned long long>(ce.head));
        ce.in_a = ((ce.tail >> ce.bit) & 1u) == 0;
        (ce.in_a ? fam_a : fam_b)[ce.bit].push_back(e);
        part.cross.push_back(ce);
        break;
      }
    }
  }
  part.core = EdgePacking(core_ids);

  auto weight_of = [&](const std::vector<EdgeId>& ids) {
    Rational total = 0;
    for (EdgeId e : ids) total += inst.weight(e);
    return total;
  };

  FamilyWeights& weights = result.weights;
  weights.core = weight_of(core_ids);
  weights.a.resize(part.bit_count);
  weights.b.resize(part.bit_count);

  // Fixed inspection order decides ties: T first, then A_0.., then B_0..
  result.best = part.core;
  result.best_family = "T";
  Rational best_weight = weights.core;
  for (int r = 0; r < part.bit_count; ++r) {
    weights.a[r] = weight_of(fam_a[r]);
    if (weights.a[r] > best_weight) {
      best_weight = weights.a[r];
      result.best = EdgePacking(fam_a[r]);
      result.best_family = "A" + std::to_string(r);
    }
  }
  for (int r = 0; r < part.bit_count; ++r) {
    weights.b[r] = weight_of(fam_b[r]);
    if (weights.b[r] > best_weight) {
      best_weight = weights.b[r];
      result.best = EdgePacking(fam_b[r]);
      result.best_family = "B" + std::to_string(r);
    }
  }
  return result;
}

}  // namespace pdbep::weighted
