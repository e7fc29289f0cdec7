#pragma once

#include <string>
#include <vector>

#include "pdbep/instance.hpp"

namespace pdbep::weighted {

// H(v): the c_v heaviest edges at v, ties broken by smaller edge id.
// Any feasible packing has weight at most sum_v w(H(v)).
struct HeavySets {
  std::vector<std::vector<EdgeId>> per_vertex;  // each sorted by edge id
};

HeavySets heavy_sets(const Instance& inst);

Rational weighted_upper_bound(const Instance& inst);

// Decomposition of the doubly-heavy core and the singly-heavy crossing
// edges into 2 * ceil(log2 n) star families indexed by the lowest
// differing bit of the endpoint labels.
struct Partition {
  EdgePacking core;                  // T: edges heavy at both endpoints
  std::vector<EdgeId> discarded;     // edges heavy at neither endpoint
  struct CrossEdge {
    EdgeId e;
    VertexId tail;  // endpoint where e is not heavy
    VertexId head;  // endpoint where e is heavy
    int bit;        // lowest bit where tail and head labels differ
    bool in_a;      // family A_bit (tail bit is 0) or B_bit (tail bit is 1)
  };
  std::vector<CrossEdge> cross;
  int bit_count = 0;  // ceil(log2 n)
};

struct FamilyWeights {
  Rational core;
  std::vector<Rational> a;  // per bit
  std::vector<Rational> b;
};

struct PartitionSolveResult {
  EdgePacking best;
  std::string best_family;  // "T", "A<r>" or "B<r>"
  Partition partition;
  FamilyWeights weights;
};

// Weighted approximation: the heaviest of T and the star families. Every
// candidate is feasible because each selected edge is heavy at a dedicated
// endpoint. Guarantee: (2 + 2 ceil(log2 n)) * w(result) >= w(opt).
PartitionSolveResult partition_solve(const Instance& inst);

}  // namespace pdbep::weighted
