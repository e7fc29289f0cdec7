#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "pdbep/rational.hpp"

namespace pdbep {

using VertexId = std::uint32_t;
using EdgeId = std::uint32_t;

struct Edge {
  VertexId u;
  VertexId v;
  bool operator==(const Edge&) const = default;
};

// A set of edge ids, kept sorted and duplicate-free.
class EdgePacking {
 public:
  EdgePacking() = default;
  explicit EdgePacking(std::vector<EdgeId> ids);

  const std::vector<EdgeId>& ids() const { return ids_; }
  std::size_t size() const { return ids_.size(); }
  bool empty() const { return ids_.empty(); }
  bool contains(EdgeId e) const;

  auto begin() const { return ids_.begin(); }
  auto end() const { return ids_.end(); }

  bool operator==(const EdgePacking&) const = default;
  // Lexicographic on the sorted id sequence; prefix compares smaller.
  bool operator<(const EdgePacking& other) const { return ids_ < other.ids_; }

 private:
  std::vector<EdgeId> ids_;
};

// Undirected multigraph with per-vertex degree bounds and optional edge
// weights. Bounds are normalized on construction: c_v <= deg(v) always
// holds afterwards. Immutable once built.
class Instance {
 public:
  // bounds must have size n; entries are clamped to the vertex degree.
  // weights, when present, must have size edges.size() with entries >= 0.
  static Instance create(std::size_t n, std::vector<Edge> edges,
                         std::vector<long long> bounds,
                         std::optional<std::vector<Rational>> weights = {});

  static Instance parse(std::istream& in);
  static Instance parse(const std::string& text);
  std::string serialize() const;

  std::size_t vertex_count() const { return bounds_.size(); }
  std::size_t edge_count() const { return edges_.size(); }
  const Edge& edge(EdgeId e) const { return edges_[e]; }
  const std::vector<Edge>& edges() const { return edges_; }

  long long bound(VertexId v) const { return bounds_[v]; }
  long long degree(VertexId v) const {
    return static_cast<long long>(incident_[v].size());
  }
  const std::vector<EdgeId>& incident(VertexId v) const {
    return incident_[v];
  }

  bool weighted() const { return weights_.has_value(); }
  // Unit weight when the instance is unweighted.
  Rational weight(EdgeId e) const {
    return weights_ ? (*weights_)[e] : Rational(1);
  }

  bool operator==(const Instance& other) const;

 private:
  Instance() = default;

  std::vector<Edge> edges_;
  std::vector<long long> bounds_;
  std::optional<std::vector<Rational>> weights_;
  std::vector<std::vector<EdgeId>> incident_;
};

// Degree of every vertex in the subgraph selected by p.
std::vector<long long> packing_degrees(const Instance& inst,
                                       const EdgePacking& p);

// Every selected edge must keep at least one endpoint within its bound.
bool is_feasible(const Instance& inst, const EdgePacking& p);

// Cardinality bound: no feasible packing exceeds sum of bounds.
long long upper_bound(const Instance& inst);

// Total weight of p (its cardinality when unweighted).
Rational packing_weight(const Instance& inst, const EdgePacking& p);

}  // namespace pdbep
