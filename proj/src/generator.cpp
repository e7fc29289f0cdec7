#include "pdbep/generator.hpp"

#include <algorithm>

#include "pdbep/errors.hpp"
#include "pdbep/rng.hpp"

namespace pdbep::harness {

namespace {

std::vector<Edge> uniform_edges(std::size_t n, std::size_t m, bool multi,
                                SplitMix64& rng) {
  if (n < 2 && m > 0) {
    throw ParameterError("uniform family needs n >= 2 to place edges");
  }
  std::vector<Edge> edges;
  edges.reserve(m);
  if (multi) {
    for (std::size_t i = 0; i < m; ++i) {
      VertexId u = static_cast<VertexId>(rng.below(n));
      VertexId v = static_cast<VertexId>(rng.below(n - 1));
      if (v >= u) ++v;
      edges.push_back({std::min(u, v), std::max(u, v)});
    }
    return edges;
  }
  const std::size_t capacity = n * (n - 1) / 2;
  if (m > capacity) {
    throw ParameterError("too many edges for a simple graph: m=" +
                         std::to_string(m) + ", max=" +
                         std::to_string(capacity));
  }
  if (m * 2 >= capacity) {
    // Dense: shuffle the full pair list.
    std::vector<Edge> all;
    all.reserve(capacity);
    for (VertexId u = 0; u + 1 < n; ++u) {
      for (VertexId v = u + 1; v < n; ++v) all.push_back({u, v});
    }
    rng.shuffle(all);
    all.resize(m);
    return all;
  }
  // Sparse: rejection-sample distinct pairs.
  std::vector<std::vector<char>> used(n);
  for (auto& row : used) row.assign(n, 0);
  while (edges.size() < m) {
    VertexId u = static_cast<VertexId>(rng.below(n));
    VertexId v = static_cast<VertexId>(rng.below(n - 1));
    if (v >= u) ++v;
    VertexId a = std::min(u, v), b = std::max(u, v);
    if (used[a][b]) continue;
    used[a][b] = 1;
    edges.push_back({a, b});
  }
  return edges;
}

}  // namespace

Instance generate(const GeneratorSpec& spec) {
  if (spec.n == 0) throw ParameterError("generator needs at least 1 vertex");
  SplitMix64 rng(derive_seed(spec.seed, 0x67656e));

  std::vector<Edge> edges;
  switch (spec.family) {
    case Family::kUniform:
      edges = uniform_edges(spec.n, spec.m, spec.multigraph, rng);
      break;
    case Family::kTree:
      for (VertexId v = 1; v < spec.n; ++v) {
        edges.push_back({static_cast<VertexId>(rng.below(v)), v});
      }
      break;
    case Family::kComplete:
      for (VertexId u = 0; u + 1 < spec.n; ++u) {
        for (VertexId v = u + 1; v < spec.n; ++v) edges.push_back({u, v});
      }
      break;
    case Family::kStar:
      for (VertexId v = 1; v < spec.n; ++v) {
        edges.push_back({0, v});
      }
      break;
    case Family::kPath:
      for (VertexId v = 1; v < spec.n; ++v) {
        edges.push_back({static_cast<VertexId>(v - 1), v});
      }
      break;
  }

  std::vector<long long> degree(spec.n, 0);
  for (const Edge& e : edges) {
    ++degree[e.u];
    ++degree[e.v];
  }
  std::vector<long long> bounds(spec.n);
  for (std::size_t v = 0; v < spec.n; ++v) {
    switch (spec.bounds) {
      case BoundPolicy::kDegree:
        bounds[v] = degree[v];
        break;
      case BoundPolicy::kFixed:
        bounds[v] = std::min(spec.fixed_bound, degree[v]);
        break;
      case BoundPolicy::kUniform:
        bounds[v] = static_cast<long long>(
            rng.below(static_cast<std::uint64_t>(degree[v]) + 1));
        break;
      case BoundPolicy::kFraction: {
        const Rational scaled = spec.fraction * Rational(degree[v]);
        bounds[v] =
            static_cast<long long>(BigInt(numerator(scaled) /
                                          denominator(scaled)));
        break;
      }
    }
  }

  std::optional<std::vector<Rational>> weights;
  if (spec.weights) {
    auto [lo, hi] = *spec.weights;
    if (lo < 0 || hi < lo) {
      throw ParameterError("weight range must satisfy 0 <= lo <= hi");
    }
    weights.emplace();
    weights->reserve(edges.size());
    for (std::size_t e = 0; e < edges.size(); ++e) {
      weights->push_back(Rational(
          lo + static_cast<long long>(
                   rng.below(static_cast<std::uint64_t>(hi - lo) + 1))));
    }
  }
  return Instance::create(spec.n, std::move(edges), std::move(bounds),
                          std::move(weights));
}

Family family_from_name(const std::string& name) {
  if (name == "uniform") return Family::kUniform;
  if (name == "tree") return Family::kTree;
  if (name == "complete") return Family::kComplete;
  if (name == "star") return Family::kStar;
  if (name == "path") return Family::kPath;
  throw ParameterError("unknown family '" + name + "'");
}

BoundPolicy bound_policy_from_name(const std::string& name) {
  if (name == "degree") return BoundPolicy::kDegree;
  if (name == "fixed") return BoundPolicy::kFixed;
  if (name == "uniform") return BoundPolicy::kUniform;
  if (name == "fraction") return BoundPolicy::kFraction;
  throw ParameterError("unknown bound policy '" + name + "'");
}

}  // namespace pdbep::harness
