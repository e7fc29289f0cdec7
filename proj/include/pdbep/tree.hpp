#pragma once

#include <optional>
#include <vector>

#include "pdbep/instance.hpp"

namespace pdbep::tree {

struct RootedTree {
  VertexId root = 0;
  std::vector<VertexId> parent;       // parent[root] == root
  std::vector<EdgeId> parent_edge;    // undefined at the root
  std::vector<std::vector<VertexId>> children;
  std::vector<VertexId> order;        // children before parents
};

// Requires a connected simple tree (m == n - 1); throws StructureError
// otherwise, ParameterError for an out-of-range root.
RootedTree root_tree(const Instance& inst,
                     std::optional<VertexId> root = {});

// Per-vertex subtree packing values by root-degree state:
//   h: degree of v at most c_v - 1, g: exactly c_v,
//   b: at least c_v with every packing-neighbor of v within its bound.
// Infeasible states read 0. Child partitions and selection sets record how
// each vertex classified and which children switched state on attachment.
struct TreeLabels {
  std::vector<long long> h, g, b;
  std::vector<std::vector<VertexId>> part_h, part_g, part_b;
  std::vector<std::vector<VertexId>> sel_low;   // attached from part_g
  std::vector<std::vector<VertexId>> sel_high;  // demoted to h-state
};

struct TreeDpResult {
  long long value;
  EdgePacking witness;
  TreeLabels labels;
};

// Exact optimum on trees in O(n log n); cardinality objective.
TreeDpResult tree_dp(const Instance& inst, std::optional<VertexId> root = {});

}  // namespace pdbep::tree
