#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "pdbep/instance.hpp"

namespace pdbep::greedy {

// Everything the addition pass decided, for audits and tests.
struct AdditionTrace {
  std::vector<EdgeId> visit_order;
  EdgePacking maximal;                // Y: greedily built maximal packing
  std::vector<VertexId> deficient;    // A: vertices with d_Y(v) < c_v
  EdgePacking supplement;             // Z: padding edges chosen for A
  bool chose_maximal;                 // result is Y (true) or Z (false)
};

// Single greedy pass adding edges whenever feasibility survives, then a
// padding set for still-deficient vertices; returns the larger of the two.
// Guarantees 4 * |result| >= sum of bounds. Weights are ignored.
// An empty order means edge-id order; otherwise order must be a
// permutation of all edge ids.
std::pair<EdgePacking, AdditionTrace> edge_addition(
    const Instance& inst, const std::vector<EdgeId>& order = {});

// Single pass over edges deleting any edge whose endpoints are currently
// both strictly over their bounds. Guarantees 2 * |result| >= sum of
// bounds and d(v) >= c_v for every vertex. Weights are ignored.
EdgePacking edge_deletion(const Instance& inst,
                          const std::vector<EdgeId>& order = {});

// Deterministic shuffled edge order for a given seed.
std::vector<EdgeId> shuffled_order(const Instance& inst, std::uint64_t seed);

}  // namespace pdbep::greedy
