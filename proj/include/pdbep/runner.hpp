#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "pdbep/instance.hpp"
#include "pdbep/lp.hpp"

namespace pdbep::harness {

enum class Algorithm {
  kAddition,
  kDeletion,
  kRounding,
  kWeighted,
  kTree,
  kExact,
  kAuto,
};

Algorithm algorithm_from_name(const std::string& name);  // ParameterError
std::string algorithm_name(Algorithm alg);

// Connected and m == n - 1.
bool is_tree_instance(const Instance& inst);

// auto picks: tree instances -> kTree, weighted -> kWeighted,
// everything else -> kDeletion.
Algorithm resolve_auto(const Instance& inst);

// FNV-1a over the canonical text, as 16 hex digits.
std::string instance_digest(const Instance& inst);

// Weight-stripped copy; bounds and edges untouched.
Instance unweighted_view(const Instance& inst);

// Vertex relabeling by a seeded permutation (edge ids keep their order).
Instance relabel(const Instance& inst, std::uint64_t seed);

struct RunParams {
  Rational eps = Rational(1, 100);
  std::optional<std::uint64_t> order_seed;  // greedy visit order
  std::optional<VertexId> root;             // tree solver
  std::size_t oracle_limit = 24;            // exhaustive reference cap
  lp::PivotRule pivot = lp::PivotRule::kDantzigBland;
};

struct NamedCheck {
  std::string name;
  bool ok;
};

// One solver run with independent certification. The feasibility flag and
// every check come from re-derivation on the instance, never from solver
// claims. Cardinality solvers measure value and bounds on the
// weight-stripped view.
struct RunReport {
  std::string digest;
  std::string solver;
  std::string order = "natural";
  Rational eps;
  std::size_t n = 0;
  std::size_t m = 0;
  bool instance_weighted = false;
  std::size_t size = 0;
  Rational value;
  bool feasible = false;
  std::string bound_name;  // "exact", "bound-sum" or "heavy-weight"
  Rational bound_value;
  bool bound_ok = false;
  std::optional<Rational> ratio;  // bound / value; empty means unbounded
  std::vector<NamedCheck> checks;
  bool long_run = false;
  double wall_ms = 0.0;
  EdgePacking packing;

  bool all_ok() const;
  // Deterministic apart from the optional timing block.
  nlohmann::ordered_json to_json(bool include_timing = false) const;
};

RunReport run(const Instance& inst, Algorithm alg, const RunParams& params = {});

struct CertifyConfig {
  std::string name = "default";
  std::uint64_t seed = 1;
  int count = 200;            // instances in the mixed batch
  std::size_t n_max = 24;     // vertices per instance, at most
  std::size_t oracle_limit = 14;
  bool weighted_mix = true;   // include weighted families
  std::vector<Rational> eps_values = {Rational(1, 100), Rational(1, 10)};

  static CertifyConfig from_json_text(const std::string& text);
  nlohmann::ordered_json to_json() const;
};

struct SolverStats {
  std::string solver;
  int runs = 0;
  int violations = 0;
  std::optional<Rational> worst_ratio;
};

struct CertifySummary {
  CertifyConfig config;
  int instances = 0;
  int runs = 0;
  bool ok = true;
  std::vector<std::string> violations;
  std::vector<SolverStats> per_solver;

  nlohmann::ordered_json to_json() const;
  std::string to_text() const;
};

// Runs every applicable solver over a seeded mixed batch and aggregates
// certificate outcomes. Execution uses a worker pool; assembly order is by
// instance index, so the summary is deterministic.
CertifySummary certify(const CertifyConfig& config);

// The mixed-family instance stream behind certify.
Instance batch_instance(std::uint64_t seed, int index, std::size_t n_max,
                        bool allow_weighted);

// In-order parallel map used by the batch drivers.
void parallel_for_index(std::size_t count,
                        const std::function<void(std::size_t)>& fn);

}  // namespace pdbep::harness
