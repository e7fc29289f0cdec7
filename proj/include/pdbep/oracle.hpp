#pragma once

#include <cstdint>

#include "pdbep/instance.hpp"

namespace pdbep::oracle {

struct OracleConfig {
  // Hard cap on edge count; larger instances are refused outright.
  std::size_t max_edges = 24;
  // Branch-and-bound pruning. Turning it off forces a full sweep of all
  // 2^m subsets; results must be identical either way.
  bool prune = true;
};

struct OracleResult {
  Rational value;
  // Lexicographically smallest optimum (sorted edge-id sequences compared
  // element-wise, shorter prefix first).
  EdgePacking witness;
  std::uint64_t explored;  // search nodes visited
};

// Exhaustive optimum. Throws RefusalError when the instance exceeds
// config.max_edges.
OracleResult exact_opt(const Instance& inst, const OracleConfig& config = {});

}  // namespace pdbep::oracle
