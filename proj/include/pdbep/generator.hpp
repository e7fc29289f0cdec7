#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "pdbep/instance.hpp"

namespace pdbep::harness {

enum class Family { kUniform, kTree, kComplete, kStar, kPath };

enum class BoundPolicy {
  kDegree,   // c_v = deg(v): every bound slack
  kFixed,    // c_v = min(deg(v), fixed_bound)
  kUniform,  // uniform in [0, deg(v)]
  kFraction, // floor(deg(v) * fraction)
};

struct GeneratorSpec {
  Family family = Family::kUniform;
  std::size_t n = 8;
  // Edge count; only kUniform uses it. Others derive their own.
  std::size_t m = 8;
  bool multigraph = false;  // kUniform may repeat vertex pairs
  BoundPolicy bounds = BoundPolicy::kDegree;
  long long fixed_bound = 1;
  Rational fraction = Rational(1, 2);
  // Integer edge weights drawn uniformly from [weight_lo, weight_hi];
  // unset keeps the instance unweighted.
  std::optional<std::pair<long long, long long>> weights;
  std::uint64_t seed = 1;
};

// Deterministic: the spec (including seed) fully determines the result.
Instance generate(const GeneratorSpec& spec);

Family family_from_name(const std::string& name);   // ParameterError
BoundPolicy bound_policy_from_name(const std::string& name);

}  // namespace pdbep::harness
