#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "pdbep/instance.hpp"
#include "pdbep/lp.hpp"

namespace pdbep::rounding {

// One step of the iterative rounding loop. Steps either batch-delete edges
// (their y hit zero, or a committed endpoint ran out of capacity, making a
// solve pointless) or round a single half-integral edge onto an endpoint.
struct IterationRecord {
  int lp_index = -1;  // which LP solve produced this step; -1 for forced
  bool forced = false;
  std::vector<EdgeId> zeroed;
  std::optional<EdgeId> rounded;
  std::optional<VertexId> chosen_endpoint;
  // Audit data captured at selection time for the rounded edge.
  Rational y_value = 0;
  long long capacity_chosen = 0;
  Rational relax_chosen = 0;  // z at the chosen endpoint
  long long capacity_other = 0;
  Rational relax_other = 0;
  std::size_t residual_edges = 0;  // live edges before this step
};

struct RoundingState {
  std::vector<bool> committed;       // final commitment set
  std::vector<long long> capacity;   // final residual capacities
  EdgePacking rounded;               // edges accepted by rounding itself
  std::vector<IterationRecord> log;
  int lp_solves = 0;
  Rational root_lp_value = 0;        // first LP objective, 0 if none solved
  bool long_run = false;             // more LP solves than vertices + 1
};

// Potential steered by the rounding solver:
//   2 |p| - (1 + eps) * sum_v max(0, deg_p(v) - c_v).
Rational phi_value(const Instance& inst, const EdgePacking& p,
                   const Rational& eps);

// Local search to a potential fixpoint: scan edges in id order, greedily
// apply any single-edge addition or removal that strictly raises the
// potential, repeat until a full pass changes nothing. The fixpoint is
// always feasible.
EdgePacking make_maximal(const Instance& inst, const EdgePacking& start,
                         const Rational& eps);

// Iterative rounding: repeatedly solve the penalized relaxation on the
// residual graph, delete zero edges in batches, otherwise round one
// half-integral edge onto an endpoint with spare capacity and no slack.
// The result goes through make_maximal. Cardinality objective; weights are
// ignored. eps must be positive (and below 1 for the approximation bound
// to mean anything).
std::pair<EdgePacking, RoundingState> solve_ip2(const Instance& inst,
                                                const Rational& eps,
                                                lp::PivotRule rule =
                                                    lp::PivotRule::kDantzigBland);

}  // namespace pdbep::rounding
